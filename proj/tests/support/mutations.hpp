#pragma once

// Single-field mutations of valid certificates. Every mutation here breaks a
// certificate clause, so a correct verifier must reject all of them.

#include <algorithm>
#include <string>
#include <vector>

#include "topochrom/minors.hpp"

namespace topochrom::testing {

template <class Cert>
struct Mutant {
  std::string kind;
  Cert cert;
};

inline std::vector<Mutant<OddMinorCertificate>> minor_mutants(const OddMinorCertificate& cert) {
  std::vector<Mutant<OddMinorCertificate>> out;
  for (const auto& [v, c] : cert.coloring) {
    auto m = cert;
    m.coloring[v] = 1 - c;
    out.push_back({"color flip", std::move(m)});
  }
  for (std::size_t i = 0; i < cert.trees.size(); ++i)
    for (std::size_t e = 0; e < cert.trees[i].edges.size(); ++e) {
      auto m = cert;
      m.trees[i].edges.erase(m.trees[i].edges.begin() + static_cast<std::ptrdiff_t>(e));
      out.push_back({"tree edge delete", std::move(m)});
    }
  for (const auto& [pair, edge] : cert.connectors) {
    auto [i, j] = pair;
    for (std::size_t k = 0; k < cert.trees.size(); ++k) {
      if (k == i || k == j) continue;
      auto m = cert;
      // Replace the endpoint lying in tree j by a vertex of tree k.
      const auto& tj = cert.trees[j].vertices;
      auto& target = std::find(tj.begin(), tj.end(), edge.first) != tj.end() ? m.connectors[pair].first
                                                                              : m.connectors[pair].second;
      target = cert.trees[k].vertices.front();
      out.push_back({"connector redirect", std::move(m)});
    }
  }
  return out;
}

inline std::vector<Mutant<OddTopologicalCertificate>> topological_mutants(const OddTopologicalCertificate& cert) {
  std::vector<Mutant<OddTopologicalCertificate>> out;
  for (const auto& [pair, path] : cert.paths)
    for (std::size_t p = 1; p + 1 < path.size(); ++p) {
      auto m = cert;
      auto& mp = m.paths[pair];
      mp.erase(mp.begin() + static_cast<std::ptrdiff_t>(p));
      out.push_back({"path shortening", std::move(m)});
    }
  for (std::size_t i = 0; i < cert.branching.size(); ++i)
    for (std::size_t j = 0; j < cert.branching.size(); ++j) {
      if (i == j) continue;
      auto m = cert;
      m.branching[i] = cert.branching[j];
      out.push_back({"branching duplication", std::move(m)});
    }
  return out;
}

}  // namespace topochrom::testing
