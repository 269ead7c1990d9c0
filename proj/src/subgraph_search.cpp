#include "topochrom/subgraph_search.hpp"

#include <algorithm>
#include <set>

#include "topochrom/error.hpp"
#include "topochrom/generators.hpp"

namespace topochrom {

namespace {

std::vector<Vertex> first_members(const Bitset& set, std::size_t count) {
  std::vector<Vertex> out;
  for (auto v = set.find_first(); v != Bitset::npos && out.size() < count; v = set.find_next(v))
    out.push_back(static_cast<Vertex>(v));
  return out;
}

// Depth-first search over `size`-subsets (increasing vertex order) whose
// common neighborhood has at least `need` members.
class CommonNeighborhoodSearch {
 public:
  CommonNeighborhoodSearch(const Graph& g, std::size_t size, std::size_t need)
      : g_(g), size_(size), need_(need) {}

  std::optional<BipartiteWitness> run() {
    Bitset all(g_.order());
    all.set();
    chosen_.clear();
    if (extend(0, all)) return witness_;
    return std::nullopt;
  }

 private:
  bool extend(Vertex from, const Bitset& common) {
    if (chosen_.size() == size_) {
      witness_ = BipartiteWitness{chosen_, first_members(common, need_)};
      return true;
    }
    const std::size_t remaining = size_ - chosen_.size();
    for (Vertex v = from; v + remaining <= g_.order(); ++v) {
      if (g_.degree(v) < need_) continue;
      Bitset next = common & g_.neighbors(v);
      if (next.count() < need_) continue;
      chosen_.push_back(v);
      if (extend(v + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t size_;
  std::size_t need_;
  std::vector<Vertex> chosen_;
  BipartiteWitness witness_;
};

class ZigzagSearch {
 public:
  ZigzagSearch(const Graph& g, const std::vector<std::vector<Vertex>>& by_color)
      : g_(g), by_color_(by_color) {}

  // `palette` holds indices into by_color, increasing color order. Rank r
  // (0-based) goes to side_a when r is even.
  bool place(const std::vector<std::size_t>& palette, std::size_t rank) {
    if (rank == palette.size()) return true;
    auto& mine = rank % 2 == 0 ? side_a_ : side_b_;
    const auto& other = rank % 2 == 0 ? side_b_ : side_a_;
    for (Vertex v : by_color_[palette[rank]]) {
      bool fits = std::all_of(other.begin(), other.end(), [&](Vertex w) { return g_.adjacent(v, w); });
      if (!fits) continue;
      mine.push_back(v);
      if (place(palette, rank + 1)) return true;
      mine.pop_back();
    }
    return false;
  }

  ZigzagWitness take(const std::vector<std::uint32_t>& palette_colors) {
    ZigzagWitness w{side_a_, side_b_, palette_colors};
    std::sort(w.side_a.begin(), w.side_a.end());
    std::sort(w.side_b.begin(), w.side_b.end());
    return w;
  }

  void reset() {
    side_a_.clear();
    side_b_.clear();
  }

 private:
  const Graph& g_;
  const std::vector<std::vector<Vertex>>& by_color_;
  std::vector<Vertex> side_a_;
  std::vector<Vertex> side_b_;
};

}  // namespace

std::optional<BipartiteWitness> find_complete_bipartite(const Graph& g, std::size_t l, std::size_t m) {
  if (l == 0 || m == 0) throw ParameterError("K_{l,m} search requires l, m >= 1");
  if (l + m > g.order()) return std::nullopt;
  if (l <= m) return CommonNeighborhoodSearch(g, l, m).run();
  auto swapped = CommonNeighborhoodSearch(g, m, l).run();
  if (!swapped) return std::nullopt;
  return BipartiteWitness{std::move(swapped->side_b), std::move(swapped->side_a)};
}

bool is_complete_bipartite_witness(const Graph& g, const BipartiteWitness& w) {
  if (w.side_a.empty() || w.side_b.empty()) return false;
  std::set<Vertex> seen;
  for (Vertex v : w.side_a)
    if (v >= g.order() || !seen.insert(v).second) return false;
  for (Vertex v : w.side_b)
    if (v >= g.order() || !seen.insert(v).second) return false;
  for (Vertex a : w.side_a)
    for (Vertex b : w.side_b)
      if (!g.adjacent(a, b)) return false;
  return true;
}

std::size_t bipartite_bound(const Graph& g) {
  if (g.size() == 0) throw ParameterError("bipartite_bound needs a graph with at least one edge");
  auto all_splits = [&](std::size_t t) {
    for (std::size_t l = 1; l <= t / 2; ++l)
      if (!find_complete_bipartite(g, l, t - l)) return false;
    return true;
  };
  // all_splits(2) holds (an edge exists) and failure is monotone upward.
  std::size_t good = 2;
  std::size_t bad = g.order() + 1;
  while (bad - good > 1) {
    std::size_t mid = good + (bad - good) / 2;
    if (all_splits(mid)) good = mid; else bad = mid;
  }
  return good;
}

std::optional<ZigzagWitness> zigzag_witness(const Graph& g, std::span<const std::uint32_t> colors,
                                            std::size_t t) {
  if (t < 2) throw ParameterError("zig-zag search requires t >= 2");
  if (!is_proper_coloring(g, colors)) throw ParameterError("zig-zag search requires a proper coloring");

  std::vector<std::uint32_t> used(colors.begin(), colors.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (used.size() < t) return std::nullopt;

  std::vector<std::vector<Vertex>> by_color(used.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto idx = std::lower_bound(used.begin(), used.end(), colors[v]) - used.begin();
    by_color[idx].push_back(v);
  }

  ZigzagSearch search(g, by_color);
  std::vector<std::size_t> palette(t);
  for (std::size_t i = 0; i < t; ++i) palette[i] = i;
  const std::size_t c = used.size();
  while (true) {
    search.reset();
    if (search.place(palette, 0)) {
      std::vector<std::uint32_t> chosen;
      for (auto idx : palette) chosen.push_back(used[idx]);
      return search.take(chosen);
    }
    std::size_t i = t;
    while (i > 0 && palette[i - 1] == c - t + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++palette[i - 1];
    for (std::size_t j = i; j < t; ++j) palette[j] = palette[j - 1] + 1;
  }
}

bool is_zigzag_witness(const Graph& g, std::span<const std::uint32_t> colors,
                       const ZigzagWitness& w, std::size_t t) {
  if (colors.size() != g.order()) return false;
  if (w.side_a.size() != (t + 1) / 2 || w.side_b.size() != t / 2 || w.colors.size() != t) return false;
  if (!is_complete_bipartite_witness(g, {w.side_a, w.side_b})) return false;
  if (!std::is_sorted(w.colors.begin(), w.colors.end()) ||
      std::adjacent_find(w.colors.begin(), w.colors.end()) != w.colors.end())
    return false;
  auto rank_of = [&](Vertex v) -> std::ptrdiff_t {
    auto it = std::find(w.colors.begin(), w.colors.end(), colors[v]);
    return it == w.colors.end() ? -1 : it - w.colors.begin();
  };
  std::set<std::uint32_t> seen;
  for (Vertex v : w.side_a) {
    auto r = rank_of(v);
    if (r < 0 || r % 2 != 0 || !seen.insert(colors[v]).second) return false;
  }
  for (Vertex v : w.side_b) {
    auto r = rank_of(v);
    if (r < 0 || r % 2 != 1 || !seen.insert(colors[v]).second) return false;
  }
  return seen.size() == t;
}

ObstructionVerdict total_graph_obstruction_check(const Graph& g) {
  ObstructionVerdict verdict;
  verdict.max_degree = max_degree(g);
  if (verdict.max_degree == 0) throw ParameterError("total-graph check needs max degree >= 1");
  verdict.witness = find_complete_bipartite(total_graph(g), 2, verdict.max_degree + 1);
  return verdict;
}

}  // namespace topochrom
