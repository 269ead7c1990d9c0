#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "topochrom/graph.hpp"

namespace topochrom {

// A (not necessarily induced) complete bipartite subgraph: every pair in
// side_a x side_b is an edge. Both sides sorted, disjoint and nonempty.
struct BipartiteWitness {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;

  friend bool operator==(const BipartiteWitness&, const BipartiteWitness&) = default;
};

// Searches for K_{l,m} as a subgraph; |side_a| = l, |side_b| = m.
//
// The smaller side is enumerated in lexicographic order over common
// neighborhoods; the larger side is the lexicographically least choice from
// the common neighborhood of the smaller one. For l <= m this is the
// lexicographically least side_a, then side_b. Throws ParameterError when
// l or m is 0.
std::optional<BipartiteWitness> find_complete_bipartite(const Graph& g, std::size_t l,
                                                        std::size_t m);

// Direct edge-by-edge check, independent of the search.
bool is_complete_bipartite_witness(const Graph& g, const BipartiteWitness& w);

// Largest t >= 2 such that K_{l,m} is a subgraph for every l + m = t with
// l, m >= 1. Upper-bound evidence for ind(B(G)) + 2. Throws ParameterError
// on graphs without edges.
std::size_t bipartite_bound(const Graph& g);

// Colorful complete bipartite subgraph with |side_a| = ceil(t/2),
// |side_b| = floor(t/2) and pairwise distinct colors; sorted, the colors
// alternate between the sides starting with side_a.
struct ZigzagWitness {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  std::vector<std::uint32_t> colors;  // increasing
};

// Enumerates t-subsets of the used colors lexicographically and returns the
// first one that admits an alternating colorful K_{ceil(t/2),floor(t/2)}.
// Throws ParameterError for improper colorings or t < 2.
std::optional<ZigzagWitness> zigzag_witness(const Graph& g, std::span<const std::uint32_t> colors,
                                            std::size_t t);

bool is_zigzag_witness(const Graph& g, std::span<const std::uint32_t> colors,
                       const ZigzagWitness& w, std::size_t t);

struct ObstructionVerdict {
  std::size_t max_degree = 0;
  std::optional<BipartiteWitness> witness;  // K_{2, max_degree + 1} in T(G)

  bool free() const noexcept { return !witness; }
};

// Looks for K_{2, Delta+1} in the total graph. Absence for Delta >= 4 is a
// theorem; for Delta <= 3 whatever the search finds is reported.
// Throws ParameterError on edgeless graphs.
ObstructionVerdict total_graph_obstruction_check(const Graph& g);

}  // namespace topochrom
