#include "topochrom/report.hpp"

#include <algorithm>
#include <stdexcept>

#include "topochrom/subgraph_search.hpp"

namespace topochrom {

BoundReport bound_report(const Graph& g, const BoundReportOptions& options) {
  BoundReport report;
  report.bipartite_bound = bipartite_bound(g);
  report.family_lower_bound = options.family_lower_bound;
  if (g.order() <= std::min<std::size_t>(options.solver.vertex_cap, 64))
    report.chromatic = chromatic_number(g, options.solver).chi;
  if (g.order() <= std::min<std::size_t>(options.box.vertex_cap, 32))
    report.betti = betti_gf2(box_complex(g, options.box)).values;
  if (report.chromatic && report.family_lower_bound && *report.chromatic < *report.family_lower_bound)
    throw std::logic_error("bound_report: chromatic number below the family lower bound");
  return report;
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json j;
  j["bipartite_bound"] = report.bipartite_bound;
  j["chromatic"] = report.chromatic ? nlohmann::json(*report.chromatic) : nlohmann::json(nullptr);
  j["betti"] = report.betti ? nlohmann::json(*report.betti) : nlohmann::json(nullptr);
  return j;
}

}  // namespace topochrom
