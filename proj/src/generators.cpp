#include "topochrom/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "topochrom/error.hpp"

namespace topochrom {

namespace {

// Calls visit(subset) for each k-subset of `pool` (sorted) in lexicographic order.
template <class Visit>
void for_each_subset(std::span<const int> pool, int k, Visit&& visit) {
  const int size = static_cast<int>(pool.size());
  if (k < 0 || k > size) return;
  std::vector<int> index(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) index[i] = i;
  std::vector<int> subset(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = pool[index[i]];
    visit(std::as_const(subset));
    int i = k - 1;
    while (i >= 0 && index[i] == size - k + i) --i;
    if (i < 0) return;
    ++index[i];
    for (int j = i + 1; j < k; ++j) index[j] = index[j - 1] + 1;
  }
}

std::vector<int> ground_set(int n) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  return pool;
}

bool disjoint_sorted(std::span<const int> a, std::span<const int> b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return true;
}

void check_cap(int n, int k, std::size_t cap) {
  if (binomial(n, k) > cap)
    throw CapacityError("KG(" + std::to_string(n) + "," + std::to_string(k) + ") has " +
                        std::to_string(binomial(n, k)) + " vertices, above the cap of " +
                        std::to_string(cap) + "; use kneser_oracle instead");
}

}  // namespace

std::uint64_t binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (long long i = 1; i <= k; ++i) {
    // result * (n-k+i) is divisible by i; split the division to stay exact
    const auto step = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(result, step);
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i) / (step / g);
    if (__builtin_mul_overflow(result / g, factor, &result)) return std::numeric_limits<std::uint64_t>::max();
  }
  return result;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  auto pool = ground_set(n);
  for_each_subset(pool, k, [&](const std::vector<int>& s) { out.push_back(s); });
  return out;
}

std::uint64_t subset_rank(std::span<const int> subset, int n) {
  const long long k = static_cast<long long>(subset.size());
  std::uint64_t rank = 0;
  int previous = 0;
  for (long long i = 0; i < k; ++i) {
    for (int x = previous + 1; x < subset[i]; ++x) rank += binomial(n - x, k - i - 1);
    previous = subset[i];
  }
  return rank;
}

bool is_stable_subset(std::span<const int> subset, int n) {
  for (std::size_t i = 0; i + 1 < subset.size(); ++i)
    if (subset[i + 1] == subset[i] + 1) return false;
  return !(subset.size() >= 2 && subset.front() == 1 && subset.back() == n);
}

std::string subset_label(std::span<const int> subset) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(subset[i]);
  }
  return s + "}";
}

KneserParams::KneserParams(int n_, int k_) : n(n_), k(k_) {
  if (k < 1) throw ParameterError("Kneser parameter k must be at least 1");
  if (n <= 2 * k)
    throw ParameterError("KG(n,k) requires n > 2k, got n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
}

KneserOracle::KneserOracle(KneserParams params, SubsetFamily family)
    : params_(params), family_(family) {}

bool KneserOracle::is_vertex(std::span<const int> v) const {
  if (v.size() != static_cast<std::size_t>(params_.k)) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > params_.n) return false;
    if (i && v[i] <= v[i - 1]) return false;
  }
  return family_ == SubsetFamily::kneser || is_stable_subset(v, params_.n);
}

bool KneserOracle::adjacent(std::span<const int> u, std::span<const int> v) const {
  return is_vertex(u) && is_vertex(v) && disjoint_sorted(u, v);
}

std::string KneserOracle::describe() const {
  return std::string(family_ == SubsetFamily::kneser ? "KG" : "SG") + "(" +
         std::to_string(params_.n) + "," + std::to_string(params_.k) + ")";
}

KneserOracle kneser_oracle(int n, int k) { return {KneserParams(n, k), SubsetFamily::kneser}; }

KneserOracle schrijver_oracle(int n, int k) {
  return {KneserParams(n, k), SubsetFamily::schrijver};
}

Graph kneser(int n, int k, std::size_t cap) {
  KneserParams params(n, k);
  check_cap(n, k, cap);
  auto vertices = k_subsets(params.n, params.k);
  std::vector<Edge> edges;
  std::vector<int> complement;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& s = vertices[i];
    complement.clear();
    for (int x = 1, j = 0; x <= n; ++x) {
      if (j < k && s[j] == x) ++j; else complement.push_back(x);
    }
    for_each_subset(complement, k, [&](const std::vector<int>& t) {
      auto r = subset_rank(t, n);
      if (r > i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(r));
    });
  }
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (const auto& s : vertices) labels.push_back(subset_label(s));
  return make_graph(vertices.size(), edges, std::move(labels));
}

Graph schrijver(int n, int k, std::size_t cap) {
  KneserParams params(n, k);
  check_cap(n, k, cap);
  std::vector<std::vector<int>> vertices;
  for_each_subset(ground_set(params.n), params.k, [&](const std::vector<int>& s) {
    if (is_stable_subset(s, n)) vertices.push_back(s);
  });
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (disjoint_sorted(vertices[i], vertices[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  std::vector<std::string> labels;
  for (const auto& s : vertices) labels.push_back(subset_label(s));
  return make_graph(vertices.size(), edges, std::move(labels));
}

Graph mycielskian(const Graph& g, std::size_t levels) {
  if (levels == 0) throw ParameterError("mycielskian needs at least one level");
  const std::size_t n = g.order();
  auto id = [n](Vertex v, std::size_t level) { return static_cast<Vertex>(level * n + v); };
  const auto apex = static_cast<Vertex>(levels * n);

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(id(u, 0), id(v, 0));
    for (std::size_t i = 0; i + 1 < levels; ++i) {
      edges.emplace_back(id(u, i), id(v, i + 1));
      edges.emplace_back(id(v, i), id(u, i + 1));
    }
  }
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(id(u, levels - 1), apex);

  std::vector<std::string> labels;
  labels.reserve(levels * n + 1);
  for (std::size_t i = 0; i < levels; ++i)
    for (Vertex v = 0; v < n; ++v) labels.push_back("(" + g.label(v) + "," + std::to_string(i) + ")");
  labels.emplace_back("z");
  return make_graph(levels * n + 1, edges, std::move(labels));
}

Graph total_graph(const Graph& g) {
  const std::size_t n = g.order();
  const auto graph_edges = g.edges();
  std::vector<Edge> edges(graph_edges.begin(), graph_edges.end());

  // Edge-vertices incident to each original vertex.
  std::vector<std::vector<Vertex>> incident(n);
  for (std::size_t e = 0; e < graph_edges.size(); ++e) {
    const auto ev = static_cast<Vertex>(n + e);
    auto [u, v] = graph_edges[e];
    edges.emplace_back(u, ev);
    edges.emplace_back(v, ev);
    incident[u].push_back(ev);
    incident[v].push_back(ev);
  }
  for (const auto& star : incident)
    for (std::size_t i = 0; i < star.size(); ++i)
      for (std::size_t j = i + 1; j < star.size(); ++j) edges.emplace_back(star[i], star[j]);

  std::vector<std::string> labels;
  labels.reserve(n + graph_edges.size());
  for (Vertex v = 0; v < n; ++v) labels.push_back(g.label(v));
  for (auto [u, v] : graph_edges) labels.push_back("e{" + g.label(u) + "," + g.label(v) + "}");
  return make_graph(n + graph_edges.size(), edges, std::move(labels));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return make_graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  return make_graph(a + b, edges);
}

Graph petersen_graph() { return kneser(5, 2); }

Graph standard_graph(std::string_view name, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw ParameterError(std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
    for (int p : params)
      if (p < 0) throw ParameterError(std::string(name) + " parameters must be non-negative");
  };
  if (name == "complete") { need(1); return complete_graph(params[0]); }
  if (name == "cycle") { need(1); return cycle_graph(params[0]); }
  if (name == "path") { need(1); return path_graph(params[0]); }
  if (name == "complete_bipartite") { need(2); return complete_bipartite_graph(params[0], params[1]); }
  if (name == "petersen") { need(0); return petersen_graph(); }
  throw ParameterError("unknown standard graph '" + std::string(name) + "'");
}

}  // namespace topochrom
