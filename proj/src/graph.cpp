#include "topochrom/graph.hpp"

#include <algorithm>
#include <queue>

#include "topochrom/error.hpp"

namespace topochrom {

std::string Graph::label(Vertex v) const {
  if (v >= order()) throw ParameterError("vertex " + std::to_string(v) + " out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph make_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n)
    throw ParameterError("label count " + std::to_string(labels.size()) + " does not match " +
                         std::to_string(n) + " vertices");

  Graph g;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(n, Bitset(n));
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].set(v);
    g.adjacency_[v].set(u);
  }
  g.labels_ = std::move(labels);
  return g;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  Bitset seen(g.order());
  std::queue<Vertex> frontier;
  seen.set(0);
  frontier.push(0);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    const Bitset& nb = g.neighbors(u);
    for (auto v = nb.find_first(); v != Bitset::npos; v = nb.find_next(v)) {
      if (!seen.test(v)) {
        seen.set(v);
        frontier.push(static_cast<Vertex>(v));
      }
    }
  }
  return seen.all();
}

bool is_proper_coloring(const Graph& g, std::span<const std::uint32_t> colors) {
  if (colors.size() != g.order())
    throw ParameterError("coloring covers " + std::to_string(colors.size()) + " of " +
                         std::to_string(g.order()) + " vertices");
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return colors[e.first] == colors[e.second]; });
}

bool is_homomorphism(const Graph& from, const Graph& to, std::span<const Vertex> map) {
  if (map.size() != from.order())
    throw ParameterError("vertex map covers " + std::to_string(map.size()) + " of " +
                         std::to_string(from.order()) + " vertices");
  for (Vertex image : map)
    if (image >= to.order())
      throw ParameterError("vertex map image " + std::to_string(image) + " outside target");
  return std::all_of(from.edges().begin(), from.edges().end(),
                     [&](const Edge& e) { return to.adjacent(map[e.first], map[e.second]); });
}

Graph direct_product(const Graph& f, const Graph& g) {
  const std::size_t m = g.order();
  std::vector<Edge> edges;
  edges.reserve(2 * f.size() * g.size());
  auto id = [m](Vertex a, Vertex b) { return static_cast<Vertex>(a * m + b); };
  for (auto [f1, f2] : f.edges()) {
    for (auto [g1, g2] : g.edges()) {
      edges.emplace_back(id(f1, g1), id(f2, g2));
      edges.emplace_back(id(f1, g2), id(f2, g1));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(f.order() * m);
  for (Vertex a = 0; a < f.order(); ++a)
    for (Vertex b = 0; b < m; ++b) labels.push_back("(" + f.label(a) + "," + g.label(b) + ")");
  return make_graph(f.order() * m, edges, std::move(labels));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> position(g.order(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order()) throw ParameterError("induced_subgraph: vertex out of range");
    position[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (position[u] != static_cast<Vertex>(-1) && position[v] != static_cast<Vertex>(-1))
      edges.emplace_back(position[u], position[v]);
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex v : keep) labels.push_back(g.label(v));
  return make_graph(keep.size(), edges, std::move(labels));
}

}  // namespace topochrom
