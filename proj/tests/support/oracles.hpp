#pragma once

// Brute-force reference implementations used only by the tests. They follow
// the textbook definitions directly and share no code paths with the
// library's search routines.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "topochrom/graph.hpp"

namespace topochrom::testing {

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

inline Graph random_connected_graph(std::size_t n, double p, std::mt19937& rng) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

// Labeled graph on n vertices whose edge set is given by the bits of `code`
// over the pairs (0,1), (0,2), ..., (n-2,n-1).
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Smallest edge code over all vertex relabelings (n <= 7).
inline std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v, ++bit)
        if (g.adjacent(perm[u], perm[v])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One representative per isomorphism class of graphs on n vertices.
inline std::vector<Graph> all_graphs_up_to_isomorphism(std::size_t n) {
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    Graph g = graph_from_code(n, code);
    if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
  }
  return out;
}

// Exhaustive k-colorability by trying all k^n assignments (n small).
inline bool brute_colorable(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  if (k == 0) return false;
  std::vector<std::uint32_t> c(n, 0);
  while (true) {
    if (is_proper_coloring(g, c)) return true;
    std::size_t i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return false;
  }
}

inline std::size_t brute_chromatic(const Graph& g) {
  std::size_t k = 0;
  while (!brute_colorable(g, k)) ++k;
  return k;
}

inline std::size_t brute_independence(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true;
    for (auto [u, v] : g.edges())
      if ((s >> u & 1) && (s >> v & 1)) independent = false;
    if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
  }
  return best;
}

// Every l-subset A and disjoint m-subset B, checking all A-B pairs.
inline bool brute_has_complete_bipartite(const Graph& g, std::size_t l, std::size_t m) {
  const std::size_t n = g.order();
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    if (static_cast<std::size_t>(__builtin_popcountll(a)) != l) continue;
    std::uint64_t common = (std::uint64_t{1} << n) - 1;
    for (Vertex v = 0; v < n; ++v)
      if (a >> v & 1) {
        std::uint64_t nb = 0;
        for (Vertex w = 0; w < n; ++w)
          if (g.adjacent(v, w)) nb |= std::uint64_t{1} << w;
        common &= nb;
      }
    if (static_cast<std::size_t>(__builtin_popcountll(common)) >= m) return true;
  }
  return false;
}

}  // namespace topochrom::testing
