#include "topochrom/minors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "topochrom/error.hpp"
#include "topochrom/generators.hpp"

namespace topochrom {

namespace {

std::string show(const VertexCode& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  return subset_label(v);
}

std::string show_pair(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Verdict fail(Clause clause, std::string detail) { return {Violation{clause, std::move(detail)}}; }

void require_vertex(const AdjacencyOracle& host, const VertexCode& v) {
  if (!host.is_vertex(v))
    throw HostVertexError(show(v) + " is not a vertex of " + host.describe());
}

// Union-find over local tree indices.
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string_view clause_name(Clause c) {
  switch (c) {
    case Clause::structure: return "structure";
    case Clause::disjointness: return "disjointness";
    case Clause::tree_edge: return "tree_edge";
    case Clause::acyclicity: return "acyclicity";
    case Clause::connectivity: return "connectivity";
    case Clause::coloring: return "coloring";
    case Clause::connector: return "connector";
    case Clause::singleton_colors: return "singleton_colors";
    case Clause::branching_distinct: return "branching_distinct";
    case Clause::path_missing: return "path_missing";
    case Clause::path_endpoints: return "path_endpoints";
    case Clause::path_parity: return "path_parity";
    case Clause::path_edge: return "path_edge";
    case Clause::path_disjoint: return "path_disjoint";
  }
  return "unknown";
}

Verdict verify_odd_minor(const AdjacencyOracle& host, const OddMinorCertificate& cert) {
  const auto& trees = cert.trees;
  const std::size_t t = trees.size();
  if (t < 2) return fail(Clause::structure, "an odd minor needs at least two trees");
  for (std::size_t i = 0; i < t; ++i)
    if (trees[i].vertices.empty()) return fail(Clause::structure, "tree " + std::to_string(i) + " is empty");

  for (const auto& tree : trees) {
    for (const auto& v : tree.vertices) require_vertex(host, v);
    for (const auto& [u, v] : tree.edges) {
      require_vertex(host, u);
      require_vertex(host, v);
    }
  }
  for (const auto& [v, c] : cert.coloring) require_vertex(host, v);
  for (const auto& [pair, edge] : cert.connectors) {
    require_vertex(host, edge.first);
    require_vertex(host, edge.second);
  }

  std::map<VertexCode, std::size_t> owner;
  for (std::size_t i = 0; i < t; ++i)
    for (const auto& v : trees[i].vertices) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh)
        return fail(Clause::disjointness, show(v) + " appears in trees " + std::to_string(it->second) +
                                              " and " + std::to_string(i));
    }

  for (std::size_t i = 0; i < t; ++i) {
    const auto& tree = trees[i];
    std::map<VertexCode, std::size_t> local;
    for (const auto& v : tree.vertices) local.emplace(v, local.size());
    Components components(tree.vertices.size());
    std::size_t merges = 0;
    for (const auto& [u, v] : tree.edges) {
      if (!local.count(u) || !local.count(v))
        return fail(Clause::tree_edge, "tree " + std::to_string(i) + " edge " + show(u) + "-" + show(v) +
                                           " leaves the tree");
      if (!host.adjacent(u, v))
        return fail(Clause::tree_edge, "tree " + std::to_string(i) + " edge " + show(u) + "-" + show(v) +
                                           " is not a host edge");
      if (!components.unite(local[u], local[v]))
        return fail(Clause::acyclicity, "tree " + std::to_string(i) + " edge " + show(u) + "-" + show(v) +
                                            " closes a cycle");
      ++merges;
    }
    if (merges + 1 != tree.vertices.size())
      return fail(Clause::connectivity, "tree " + std::to_string(i) + " is not connected");
  }

  for (const auto& [v, i] : owner) {
    auto it = cert.coloring.find(v);
    if (it == cert.coloring.end()) return fail(Clause::coloring, show(v) + " has no color");
    if (it->second != 0 && it->second != 1)
      return fail(Clause::coloring, show(v) + " has color " + std::to_string(it->second) + ", expected 0 or 1");
  }
  for (const auto& [v, c] : cert.coloring)
    if (!owner.count(v)) return fail(Clause::coloring, show(v) + " is colored but belongs to no tree");
  for (std::size_t i = 0; i < t; ++i)
    for (const auto& [u, v] : trees[i].edges)
      if (cert.coloring.at(u) == cert.coloring.at(v))
        return fail(Clause::coloring, "tree " + std::to_string(i) + " edge " + show(u) + "-" + show(v) +
                                          " is monochromatic");

  if (!cert.connectors.empty()) {
    for (const auto& [pair, edge] : cert.connectors)
      if (pair.first >= pair.second || pair.second >= t)
        return fail(Clause::structure, "connector key " + show_pair(pair.first, pair.second) + " is not a tree pair");
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j) {
        auto it = cert.connectors.find({i, j});
        if (it == cert.connectors.end())
          return fail(Clause::connector, "no connector for trees " + show_pair(i, j));
        auto [u, v] = it->second;
        if (owner.count(u) && owner.at(u) == j) std::swap(u, v);
        if (!owner.count(u) || owner.at(u) != i || !owner.count(v) || owner.at(v) != j)
          return fail(Clause::connector, "connector " + show_pair(i, j) + " " + show(u) + "-" + show(v) +
                                             " does not join trees " + std::to_string(i) + " and " +
                                             std::to_string(j));
        if (!host.adjacent(u, v))
          return fail(Clause::connector, "connector " + show_pair(i, j) + " " + show(u) + "-" + show(v) +
                                             " is not a host edge");
        if (cert.coloring.at(u) != cert.coloring.at(v))
          return fail(Clause::connector, "connector " + show_pair(i, j) + " " + show(u) + "-" + show(v) +
                                             " joins different colors");
      }
  } else {
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j) {
        bool found = false;
        for (const auto& u : trees[i].vertices) {
          for (const auto& v : trees[j].vertices)
            if (cert.coloring.at(u) == cert.coloring.at(v) && host.adjacent(u, v)) {
              found = true;
              break;
            }
          if (found) break;
        }
        if (!found)
          return fail(Clause::connector, "no same-colored edge between trees " + show_pair(i, j));
      }
  }

  // Consequence of the connector clause: singleton trees pairwise share a color.
  std::optional<int> singleton_color;
  for (const auto& tree : trees) {
    if (tree.vertices.size() != 1) continue;
    int c = cert.coloring.at(tree.vertices.front());
    if (singleton_color && *singleton_color != c)
      return fail(Clause::singleton_colors, "singleton trees carry different colors");
    singleton_color = c;
  }
  return {};
}

Verdict verify_odd_minor(const Graph& host, const OddMinorCertificate& cert) {
  return verify_odd_minor(GraphOracle(host), cert);
}

Verdict verify_odd_topological(const AdjacencyOracle& host, const OddTopologicalCertificate& cert) {
  const auto& branching = cert.branching;
  const std::size_t t = branching.size();
  if (t < 2) return fail(Clause::structure, "a topological clique needs at least two branching vertices");
  for (const auto& b : branching) require_vertex(host, b);
  for (const auto& [pair, path] : cert.paths)
    for (const auto& v : path) require_vertex(host, v);

  std::set<VertexCode> branch_set;
  for (std::size_t i = 0; i < t; ++i)
    if (!branch_set.insert(branching[i]).second)
      return fail(Clause::branching_distinct, "branching vertex " + show(branching[i]) + " is repeated");

  for (const auto& [pair, path] : cert.paths)
    if (pair.first >= pair.second || pair.second >= t)
      return fail(Clause::structure, "path key " + show_pair(pair.first, pair.second) + " is not a branching pair");

  std::set<VertexCode> used;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      auto it = cert.paths.find({i, j});
      if (it == cert.paths.end()) return fail(Clause::path_missing, "no path for pair " + show_pair(i, j));
      const auto& path = it->second;
      const bool forward = path.size() >= 2 && path.front() == branching[i] && path.back() == branching[j];
      const bool backward = path.size() >= 2 && path.front() == branching[j] && path.back() == branching[i];
      if (!forward && !backward)
        return fail(Clause::path_endpoints, "path " + show_pair(i, j) + " does not join its branching vertices");
      if ((path.size() - 1) % 2 == 0)
        return fail(Clause::path_parity, "path " + show_pair(i, j) + " has " + std::to_string(path.size() - 1) +
                                             " edges");
      for (std::size_t p = 0; p + 1 < path.size(); ++p)
        if (!host.adjacent(path[p], path[p + 1]))
          return fail(Clause::path_edge, "path " + show_pair(i, j) + " step " + show(path[p]) + "-" +
                                             show(path[p + 1]) + " is not a host edge");
      for (std::size_t p = 1; p + 1 < path.size(); ++p) {
        if (branch_set.count(path[p]))
          return fail(Clause::path_disjoint, "path " + show_pair(i, j) + " passes through branching vertex " +
                                                 show(path[p]));
        if (!used.insert(path[p]).second)
          return fail(Clause::path_disjoint, "internal vertex " + show(path[p]) + " is reused (path " +
                                                 show_pair(i, j) + ")");
      }
    }
  }
  return {};
}

Verdict verify_odd_topological(const Graph& host, const OddTopologicalCertificate& cert) {
  return verify_odd_topological(GraphOracle(host), cert);
}

OddMinorCertificate topological_to_minor(const AdjacencyOracle& host, const OddTopologicalCertificate& cert) {
  if (auto verdict = verify_odd_topological(host, cert); !verdict)
    throw ParameterError("topological certificate is invalid: " +
                         std::string(clause_name(verdict.violation->clause)) + ": " + verdict.violation->detail);

  const std::size_t t = cert.branching.size();
  OddMinorCertificate minor;
  minor.host = cert.host;
  minor.trees.resize(t);
  for (std::size_t i = 0; i < t; ++i) {
    minor.trees[i].vertices.push_back(cert.branching[i]);
    minor.coloring[cert.branching[i]] = 0;
  }

  for (const auto& [pair, stored] : cert.paths) {
    auto [i, j] = pair;
    std::vector<VertexCode> path = stored;
    if (path.front() != cert.branching[i]) std::reverse(path.begin(), path.end());
    const std::size_t s = (path.size() - 2) / 2;  // path has 2s + 2 vertices
    const std::size_t last = path.size() - 1;
    for (std::size_t p = 1; p <= s; ++p) {
      minor.trees[i].vertices.push_back(path[p]);
      minor.trees[i].edges.emplace_back(path[p - 1], path[p]);
      minor.coloring[path[p]] = static_cast<int>(p % 2);
    }
    for (std::size_t p = last - 1; p >= s + 1; --p) {
      minor.trees[j].vertices.push_back(path[p]);
      minor.trees[j].edges.emplace_back(path[p + 1], path[p]);
      minor.coloring[path[p]] = static_cast<int>((last - p) % 2);
    }
    minor.connectors[{i, j}] = {path[s], path[s + 1]};
  }
  return minor;
}

OddMinorCertificate topological_to_minor(const OddTopologicalCertificate& cert) {
  auto host = make_host_oracle(cert.host);
  return topological_to_minor(*host, cert);
}

OddMinorCertificate lift_odd_minor_mycielski(const Graph& g, const OddMinorCertificate& cert,
                                             std::size_t levels) {
  if (levels == 0) throw ParameterError("mycielski lift needs r >= 1");
  if (!is_connected(g)) throw ParameterError("mycielski lift needs a connected graph");
  if (auto verdict = verify_odd_minor(g, cert); !verdict)
    throw ParameterError("input certificate is invalid: " + std::string(clause_name(verdict.violation->clause)) +
                         ": " + verdict.violation->detail);

  const std::size_t n = g.order();
  const Graph lifted = mycielskian(g, levels);
  const auto apex = static_cast<Vertex>(levels * n);
  auto level_of = [&](Vertex v) { return v == apex ? levels : v / n; };

  // Blue: the color every singleton tree carries, 0 when there is none.
  int blue = 0;
  for (const auto& tree : cert.trees)
    if (tree.vertices.size() == 1) {
      blue = cert.coloring.at(tree.vertices.front());
      break;
    }
  auto color_of_level = [&](std::size_t level) { return level % 2 == 1 ? blue : 1 - blue; };

  // Level-0 ids coincide with the ids in G, so the old trees carry over.
  OddMinorCertificate out;
  out.host = mycielski_host(cert.host.family.empty() ? inline_graph_host(g) : cert.host,
                            static_cast<int>(levels));
  out.trees = cert.trees;
  out.coloring = cert.coloring;
  out.connectors = cert.connectors;

  // Breadth-first spanning tree of levels >= 1 plus z, rooted at z.
  Tree upper;
  std::vector<bool> seen(lifted.order(), false);
  std::queue<Vertex> frontier;
  seen[apex] = true;
  frontier.push(apex);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    upper.vertices.push_back(vertex_code(u));
    out.coloring[vertex_code(u)] = color_of_level(level_of(u));
    const Bitset& nb = lifted.neighbors(u);
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
      auto v = static_cast<Vertex>(w);
      if (seen[v] || level_of(v) == 0) continue;
      seen[v] = true;
      upper.edges.emplace_back(vertex_code(u), vertex_code(v));
      frontier.push(v);
    }
  }
  const std::size_t apex_tree = out.trees.size();
  out.trees.push_back(std::move(upper));

  if (out.connectors.empty()) {
    for (std::size_t i = 0; i < cert.trees.size(); ++i)
      for (std::size_t j = i + 1; j < cert.trees.size(); ++j)
        for (const auto& u : cert.trees[i].vertices)
          for (const auto& v : cert.trees[j].vertices)
            if (!out.connectors.count({i, j}) && cert.coloring.at(u) == cert.coloring.at(v) &&
                g.adjacent(static_cast<Vertex>(u[0]), static_cast<Vertex>(v[0])))
              out.connectors[{i, j}] = {u, v};
  }

  // Each old tree has a blue vertex (u, 0); any neighbor v of u in G gives
  // the level-1 vertex (v, 1), which is blue. For r = 1 the neighbor is z.
  for (std::size_t i = 0; i < cert.trees.size(); ++i) {
    std::optional<Vertex> anchor;
    for (const auto& code : cert.trees[i].vertices) {
      auto u = static_cast<Vertex>(code[0]);
      if (cert.coloring.at(code) == blue && (!anchor || u < *anchor)) anchor = u;
    }
    if (!anchor) throw std::logic_error("lift: tree without a blue vertex");
    Vertex partner = apex;
    if (levels >= 2) partner = static_cast<Vertex>(n + g.neighbors(*anchor).find_first());
    out.connectors[{i, apex_tree}] = {vertex_code(*anchor), vertex_code(partner)};
  }
  return out;
}

}  // namespace topochrom
