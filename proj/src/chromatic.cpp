#include "topochrom/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "topochrom/error.hpp"
#include "topochrom/generators.hpp"

namespace topochrom {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g, SolverLimits limits, const char* what) {
  const std::size_t cap = std::min<std::size_t>(limits.vertex_cap, 64);
  if (g.order() > cap)
    throw CapacityError(std::string(what) + ": " + std::to_string(g.order()) +
                        " vertices exceed the exact-solver cap of " + std::to_string(cap));
  std::vector<Mask> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  std::vector<Vertex> run() {
    Mask all = adj_.size() == 64 ? ~Mask{0} : bit(adj_.size()) - 1;
    expand(0, all);
    std::vector<Vertex> out;
    for (Mask rest = best_; rest; rest &= rest - 1) out.push_back(static_cast<Vertex>(std::countr_zero(rest)));
    return out;
  }

 private:
  void expand(Mask current, Mask candidates) {
    // Greedy coloring of the candidates gives the pruning bound.
    std::vector<std::size_t> order;
    std::vector<int> bound;
    Mask uncolored = candidates;
    for (int color = 1; uncolored; ++color) {
      Mask available = uncolored;
      while (available) {
        auto v = static_cast<std::size_t>(std::countr_zero(available));
        available &= ~bit(v) & ~adj_[v];
        uncolored &= ~bit(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    const int size = std::popcount(current);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + bound[i] <= best_size_) return;
      std::size_t v = order[i];
      Mask next = candidates & adj_[v];
      if (next == 0) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = current | bit(v);
        }
      } else {
        expand(current | bit(v), next);
      }
      candidates &= ~bit(v);
    }
  }

  std::vector<Mask> adj_;
  Mask best_ = 0;
  int best_size_ = 0;
};

// DSATUR backtracking for a fixed color budget.
class ColoringSearch {
 public:
  ColoringSearch(const std::vector<Mask>& adj, std::size_t colors)
      : adj_(adj), budget_(colors), color_(adj.size(), -1), classes_(colors, 0) {}

  bool run(const std::vector<Vertex>& seed) {
    Mask uncolored = adj_.size() == 64 ? ~Mask{0} : bit(adj_.size()) - 1;
    std::size_t used = 0;
    for (Vertex v : seed) {
      if (used >= budget_) return false;
      assign(v, used++);
      uncolored &= ~bit(v);
    }
    return extend(uncolored, used);
  }

  Coloring coloring() const {
    Coloring out(color_.size());
    for (std::size_t v = 0; v < color_.size(); ++v) out[v] = static_cast<std::uint32_t>(color_[v]);
    return out;
  }

 private:
  Mask forbidden(std::size_t v) const {
    Mask f = 0;
    for (std::size_t c = 0; c < budget_; ++c)
      if (classes_[c] & adj_[v]) f |= bit(c);
    return f;
  }

  void assign(std::size_t v, std::size_t c) {
    color_[v] = static_cast<int>(c);
    classes_[c] |= bit(v);
  }

  void unassign(std::size_t v) {
    classes_[static_cast<std::size_t>(color_[v])] &= ~bit(v);
    color_[v] = -1;
  }

  bool extend(Mask uncolored, std::size_t used) {
    if (uncolored == 0) return true;
    std::size_t pick = 0;
    int best_sat = -1;
    int best_deg = -1;
    Mask pick_forbidden = 0;
    for (Mask rest = uncolored; rest; rest &= rest - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(rest));
      Mask f = forbidden(v);
      int sat = std::popcount(f);
      if (static_cast<std::size_t>(sat) == budget_) return false;
      int deg = std::popcount(adj_[v] & uncolored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
        pick_forbidden = f;
      }
    }
    const std::size_t limit = std::min(budget_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (pick_forbidden & bit(c)) continue;
      assign(pick, c);
      if (extend(uncolored & ~bit(pick), std::max(used, c + 1))) return true;
      unassign(pick);
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  std::size_t budget_;
  std::vector<int> color_;
  std::vector<Mask> classes_;
};

// Plain DSATUR without backtracking: an upper bound and its coloring.
Coloring greedy_dsatur(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  Coloring color(n, 0);
  std::vector<Mask> seen(n, 0);  // neighbor colors, capped at 64 distinct
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    int best_sat = -1, best_deg = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v]) continue;
      int sat = std::popcount(seen[v]);
      int deg = std::popcount(adj[v]);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    std::uint32_t c = 0;
    while (c < 64 && (seen[pick] & bit(c))) ++c;
    color[pick] = c;
    done[pick] = true;
    for (Mask rest = adj[pick]; rest; rest &= rest - 1)
      seen[static_cast<std::size_t>(std::countr_zero(rest))] |= bit(c);
  }
  return color;
}

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g, SolverLimits limits) {
  return CliqueSearch(adjacency_masks(g, limits, "maximum_clique")).run();
}

std::vector<Vertex> maximum_independent_set(const Graph& g, SolverLimits limits) {
  auto adj = adjacency_masks(g, limits, "independence_number");
  const Mask all = adj.size() == 64 ? ~Mask{0} : bit(adj.size()) - 1;
  for (std::size_t v = 0; v < adj.size(); ++v) adj[v] = all & ~adj[v] & ~bit(v);
  return CliqueSearch(std::move(adj)).run();
}

std::size_t independence_number(const Graph& g, SolverLimits limits) {
  return maximum_independent_set(g, limits).size();
}

ChromaticResult chromatic_number(const Graph& g, SolverLimits limits) {
  auto adj = adjacency_masks(g, limits, "chromatic_number");
  if (g.order() == 0) return {};
  auto clique = CliqueSearch(adj).run();

  Coloring upper = greedy_dsatur(adj);
  const std::size_t upper_count = *std::max_element(upper.begin(), upper.end()) + 1;
  for (std::size_t k = clique.size(); k < upper_count; ++k) {
    ColoringSearch search(adj, k);
    if (search.run(clique)) return {k, search.coloring()};
  }
  return {upper_count, std::move(upper)};
}

std::size_t total_chromatic_number(const Graph& g, SolverLimits limits) {
  return chromatic_number(total_graph(g), limits).chi;
}

Rational kneser_fractional_chromatic(int n, int k) {
  KneserParams params(n, k);
  auto d = std::gcd(params.n, params.k);
  return {params.n / d, params.k / d};
}

}  // namespace topochrom
