#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace topochrom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Color of vertex v is colors[v]. Must cover every vertex.
using Coloring = std::vector<std::uint32_t>;

// Image of vertex v is map[v].
using VertexMap = std::vector<Vertex>;

// Finite simple undirected graph on vertices 0..n-1.
//
// Edges are kept twice: as a sorted list of (u, v) pairs with u < v, and as
// one neighborhood bitset per vertex. Instances are immutable once built by
// make_graph().
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return u < order() && v < order() && adjacency_[u].test(v);
  }

  const Bitset& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).count(); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::span<const std::string> labels() const noexcept { return labels_; }

  // Display label of v; the decimal id when the graph is unlabeled.
  std::string label(Vertex v) const;

  friend Graph make_graph(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels);

 private:
  std::vector<Edge> edges_;
  std::vector<Bitset> adjacency_;
  std::vector<std::string> labels_;
};

// Normalizes the edge list (orients u < v, sorts, drops duplicates).
// Throws ParameterError on loops, out-of-range endpoints, or a label count
// other than 0 or n.
Graph make_graph(std::size_t n, std::span<const Edge> edges,
                 std::vector<std::string> labels = {});

std::size_t max_degree(const Graph& g);

bool is_connected(const Graph& g);

// True iff no edge is monochromatic. Throws ParameterError if the coloring
// does not cover every vertex.
bool is_proper_coloring(const Graph& g, std::span<const std::uint32_t> colors);

// True iff every edge of `from` maps onto an edge of `to`. Throws
// ParameterError on a partial map or an image outside `to`.
bool is_homomorphism(const Graph& from, const Graph& to, std::span<const Vertex> map);

// Direct (categorical) product. Vertex (f, g) gets id f * |V(G)| + g.
Graph direct_product(const Graph& f, const Graph& g);

// Subgraph induced on `keep`, renumbered in the given order; labels follow.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace topochrom
