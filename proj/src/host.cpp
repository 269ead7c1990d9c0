#include "topochrom/host.hpp"

#include "topochrom/error.hpp"
#include "topochrom/generators.hpp"

namespace topochrom {

HostSpec kneser_host(int n, int k) { return {"kneser", {n, k}, {}, {}}; }

HostSpec schrijver_host(int n, int k) { return {"schrijver", {n, k}, {}, {}}; }

HostSpec inline_graph_host(const Graph& g) {
  return {"graph", {static_cast<int>(g.order())}, {}, {g.edges().begin(), g.edges().end()}};
}

HostSpec mycielski_host(HostSpec base, int levels) {
  HostSpec spec{"mycielski", {levels}, {}, {}};
  spec.base.push_back(std::move(base));
  return spec;
}

Graph materialize_host(const HostSpec& spec) {
  if (spec.implicit())
    throw ParameterError("host family '" + spec.family + "' is implicit and is not materialized");
  if (spec.family == "mycielski" || spec.family == "total") {
    if (spec.base.size() != 1) throw ParameterError(spec.family + " host needs exactly one base");
    Graph base = materialize_host(spec.base.front());
    if (spec.family == "total") return total_graph(base);
    if (spec.params.size() != 1 || spec.params[0] < 1)
      throw ParameterError("mycielski host needs params [r] with r >= 1");
    return mycielskian(base, static_cast<std::size_t>(spec.params[0]));
  }
  if (spec.family == "graph") {
    if (spec.params.size() != 1 || spec.params[0] < 0)
      throw ParameterError("graph host needs params [n]");
    return make_graph(static_cast<std::size_t>(spec.params[0]), spec.edges);
  }
  return standard_graph(spec.family, spec.params);
}

std::unique_ptr<AdjacencyOracle> make_host_oracle(const HostSpec& spec) {
  if (spec.implicit()) {
    if (spec.params.size() != 2) throw ParameterError(spec.family + " host needs params [n, k]");
    auto family = spec.family == "kneser" ? SubsetFamily::kneser : SubsetFamily::schrijver;
    return std::make_unique<KneserOracle>(KneserParams(spec.params[0], spec.params[1]), family);
  }
  return std::make_unique<GraphOracle>(materialize_host(spec), spec.family);
}

}  // namespace topochrom
