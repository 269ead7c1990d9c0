#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topochrom/graph.hpp"
#include "topochrom/host.hpp"
#include "topochrom/oracle.hpp"

namespace topochrom {

using CodeEdge = std::pair<VertexCode, VertexCode>;

// Index pair (i, j) with i < j.
using TreePair = std::pair<std::size_t, std::size_t>;

struct Tree {
  std::vector<VertexCode> vertices;
  std::vector<CodeEdge> edges;
};

// t vertex-disjoint trees, a 2-coloring of their vertices (colors 0 and 1)
// that is proper on every tree, and for each tree pair an edge between the
// two trees whose endpoints share a color. An empty connector map asks the
// verifier to find the connecting edges itself.
struct OddMinorCertificate {
  HostSpec host;
  std::vector<Tree> trees;
  std::map<VertexCode, int> coloring;
  std::map<TreePair, CodeEdge> connectors;
};

// t distinct branching vertices and, for each pair (i, j), a path from
// branching[i] to branching[j] with an odd number of edges. Paths share no
// internal vertices and avoid all branching vertices internally.
struct OddTopologicalCertificate {
  HostSpec host;
  std::vector<VertexCode> branching;
  std::map<TreePair, std::vector<VertexCode>> paths;
};

enum class Clause {
  structure,
  disjointness,
  tree_edge,
  acyclicity,
  connectivity,
  coloring,
  connector,
  singleton_colors,
  branching_distinct,
  path_missing,
  path_endpoints,
  path_parity,
  path_edge,
  path_disjoint,
};

std::string_view clause_name(Clause c);

struct Violation {
  Clause clause;
  std::string detail;
};

struct Verdict {
  std::optional<Violation> violation;

  bool valid() const noexcept { return !violation; }
  explicit operator bool() const noexcept { return valid(); }
};

// A certificate names something that is not a vertex of its host. Distinct
// from an invalid certificate over genuine host vertices.
class HostVertexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checks every certificate clause against the host; the first violated
// clause is reported. Throws HostVertexError on non-vertices.
Verdict verify_odd_minor(const AdjacencyOracle& host, const OddMinorCertificate& cert);
Verdict verify_odd_minor(const Graph& host, const OddMinorCertificate& cert);

Verdict verify_odd_topological(const AdjacencyOracle& host, const OddTopologicalCertificate& cert);
Verdict verify_odd_topological(const Graph& host, const OddTopologicalCertificate& cert);

// Splits every path v0 .. v(2s+1) at its middle edge: v0..vs joins the tree
// of its first branching vertex, v(s+1)..v(2s+1) that of the second. All
// branching vertices get color 0 and tree vertices are colored by distance
// parity, so the middle edge joins two equal colors and becomes the
// connector. Throws ParameterError when the input does not verify.
OddMinorCertificate topological_to_minor(const AdjacencyOracle& host,
                                         const OddTopologicalCertificate& cert);
OddMinorCertificate topological_to_minor(const OddTopologicalCertificate& cert);

// Lifts an odd K_t minor of a connected graph G to an odd K_{t+1} minor of
// M_r(G). The input trees stay on level 0; the new tree is a breadth-first
// spanning tree of the upper levels and z, rooted at z, colored by level
// parity so that level-1 vertices carry the color shared by singleton trees.
// Throws ParameterError for disconnected G, r = 0, or an invalid input.
OddMinorCertificate lift_odd_minor_mycielski(const Graph& g, const OddMinorCertificate& cert,
                                             std::size_t levels);

}  // namespace topochrom
