#pragma once

#include <span>
#include <string>
#include <vector>

#include "topochrom/graph.hpp"

namespace topochrom {

// Portable vertex encoding used by certificates. Subset families use the
// sorted elements (1-based); explicit graphs use a single integer id.
using VertexCode = std::vector<int>;

// Implicit graph: vertex validity and adjacency without materialization.
//
// Implementations must keep adjacent() symmetric and irreflexive, and return
// false whenever either argument fails is_vertex().
class AdjacencyOracle {
 public:
  virtual ~AdjacencyOracle() = default;

  virtual bool is_vertex(std::span<const int> v) const = 0;
  virtual bool adjacent(std::span<const int> u, std::span<const int> v) const = 0;
  virtual std::string describe() const = 0;
};

// Adapter presenting an explicit Graph through the oracle interface. Vertex
// codes are one-element sequences {id}.
class GraphOracle final : public AdjacencyOracle {
 public:
  explicit GraphOracle(Graph g, std::string name = "graph")
      : graph_(std::move(g)), name_(std::move(name)) {}

  bool is_vertex(std::span<const int> v) const override {
    return v.size() == 1 && v[0] >= 0 && static_cast<std::size_t>(v[0]) < graph_.order();
  }

  bool adjacent(std::span<const int> u, std::span<const int> v) const override {
    return is_vertex(u) && is_vertex(v) &&
           graph_.adjacent(static_cast<Vertex>(u[0]), static_cast<Vertex>(v[0]));
  }

  std::string describe() const override {
    return name_ + " (" + std::to_string(graph_.order()) + " vertices, " +
           std::to_string(graph_.size()) + " edges)";
  }

  const Graph& graph() const noexcept { return graph_; }

 private:
  Graph graph_;
  std::string name_;
};

inline VertexCode vertex_code(Vertex v) { return {static_cast<int>(v)}; }

}  // namespace topochrom
