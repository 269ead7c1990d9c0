#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "topochrom/box_complex.hpp"
#include "topochrom/chromatic.hpp"
#include "topochrom/graph.hpp"

namespace topochrom {

// Computed evidence about a graph's chromatic number.
//
// The Z2-index of B(G) and the Z2-coindex of B0(G) are not computable in
// general and Betti numbers do not determine them, so those two fields stay
// empty; they exist to name the quantities the other fields bound.
struct BoundReport {
  std::size_t bipartite_bound = 0;          // >= ind(B(G)) + 2
  std::optional<std::size_t> chromatic;     // exact, when within the solver cap
  std::optional<std::vector<long long>> betti;  // GF(2), unreduced, of B(G)
  std::optional<std::size_t> family_lower_bound;
  std::optional<int> ind_box;               // never evaluated
  std::optional<int> coind_box0;            // never evaluated
};

struct BoundReportOptions {
  SolverLimits solver;
  BoxComplexOptions box;
  // e.g. n - 2k + 2 for a Kneser graph; checked against the exact value
  std::optional<std::size_t> family_lower_bound;
};

// Parts beyond their caps are left empty. Throws std::logic_error if the
// exact chromatic number falls below family_lower_bound.
BoundReport bound_report(const Graph& g, const BoundReportOptions& options = {});

// {"bipartite_bound": int, "chromatic": int|null, "betti": [int]|null}
nlohmann::json to_json(const BoundReport& report);

}  // namespace topochrom
