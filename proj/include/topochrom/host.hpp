#pragma once

#include <memory>
#include <string>
#include <vector>

#include "topochrom/graph.hpp"
#include "topochrom/oracle.hpp"

namespace topochrom {

// Self-description of the graph a certificate lives in.
//
//   kneser / schrijver      params [n, k]       implicit, subset-encoded vertices
//   complete, cycle, path   params [n]          explicit, integer ids
//   complete_bipartite      params [a, b]
//   petersen                params []
//   mycielski               params [r], base    M_r(base)
//   total                   params [],  base    T(base)
//   graph                   params [n], edges   inline edge list
struct HostSpec {
  std::string family;
  std::vector<int> params;
  std::vector<HostSpec> base;  // one entry for mycielski / total
  std::vector<Edge> edges;     // family "graph"

  bool implicit() const noexcept { return family == "kneser" || family == "schrijver"; }
  friend bool operator==(const HostSpec&, const HostSpec&) = default;
};

HostSpec kneser_host(int n, int k);
HostSpec schrijver_host(int n, int k);
HostSpec inline_graph_host(const Graph& g);
HostSpec mycielski_host(HostSpec base, int levels);

// Builds an explicit host. Throws ParameterError for implicit families and
// malformed specs.
Graph materialize_host(const HostSpec& spec);

std::unique_ptr<AdjacencyOracle> make_host_oracle(const HostSpec& spec);

}  // namespace topochrom
