#include "topochrom/enumeration.hpp"

#include <algorithm>
#include <unordered_set>

#include "topochrom/error.hpp"

namespace topochrom {

std::uint64_t edge_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 11) throw ParameterError("edge codes need at most 11 vertices");
  std::uint64_t code = 0;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (g.adjacent(u, v)) code |= std::uint64_t{1} << bit;
  return code;
}

Graph graph_from_edge_code(std::size_t n, std::uint64_t code) {
  if (n > 11) throw ParameterError("edge codes need at most 11 vertices");
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

std::uint64_t canonical_edge_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 11) throw ParameterError("edge codes need at most 11 vertices");
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  auto by_degree = [&](Vertex a, Vertex b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  };
  std::sort(order.begin(), order.end(), by_degree);

  // Permute only within blocks of equal degree.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  auto evaluate = [&] {
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v, ++bit)
        if (g.adjacent(order[u], order[v])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  };
  // Odometer over the permutations of each block.
  while (true) {
    evaluate();
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;  // wraps to sorted on false
    }
    if (b == blocks.size()) return best;
  }
}

std::vector<Graph> graph_classes(std::size_t n) {
  if (n > max_enumeration_order)
    throw ParameterError("graph enumeration supports at most " + std::to_string(max_enumeration_order) +
                         " vertices");
  const std::size_t pairs = n * (n - (n > 0)) / 2;
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> codes;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    auto canonical = canonical_edge_code(graph_from_edge_code(n, code));
    if (seen.insert(canonical).second) codes.push_back(canonical);
  }
  std::sort(codes.begin(), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (auto code : codes) out.push_back(graph_from_edge_code(n, code));
  return out;
}

}  // namespace topochrom
