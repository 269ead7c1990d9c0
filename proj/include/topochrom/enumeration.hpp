#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "topochrom/graph.hpp"

namespace topochrom {

// Largest order accepted by graph_classes().
inline constexpr std::size_t max_enumeration_order = 7;

// Edge set of a graph on at most 11 vertices as bits over the pairs
// (0,1), (0,2), ..., (n-2,n-1).
std::uint64_t edge_code(const Graph& g);
Graph graph_from_edge_code(std::size_t n, std::uint64_t code);

// Least edge code over all relabelings that list vertices by nonincreasing
// degree. Equal for two graphs iff they are isomorphic.
std::uint64_t canonical_edge_code(const Graph& g);

// One representative per isomorphism class of graphs on n vertices, in
// increasing canonical code order. Throws ParameterError above
// max_enumeration_order.
std::vector<Graph> graph_classes(std::size_t n);

}  // namespace topochrom
