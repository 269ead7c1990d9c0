#include "topochrom/kneser_construct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "topochrom/error.hpp"
#include "topochrom/generators.hpp"

namespace topochrom {

namespace {

std::size_t wrap(long long position, std::size_t circle_size) {
  auto n = static_cast<long long>(circle_size);
  return static_cast<std::size_t>(((position % n) + n) % n);
}

bool disjoint_arcs(const Arc& a, const Arc& b, std::size_t circle_size) {
  // b starts within a, or a starts within b
  auto offset = [&](std::size_t from, std::size_t to) { return wrap(static_cast<long long>(to) - static_cast<long long>(from), circle_size); };
  return offset(a.start, b.start) >= a.length && offset(b.start, a.start) >= b.length;
}

std::vector<std::size_t> shift_walk(std::size_t from, std::size_t to, std::size_t circle_size,
                                    std::size_t arc_length, bool forward) {
  const auto n = static_cast<long long>(circle_size);
  const auto len = static_cast<long long>(arc_length);
  const auto d = forward ? wrap(static_cast<long long>(to) - static_cast<long long>(from), circle_size)
                         : wrap(static_cast<long long>(from) - static_cast<long long>(to), circle_size);
  std::vector<std::size_t> starts{from};
  auto current = static_cast<long long>(from);
  for (std::size_t step = 0; step < d; ++step) {
    if (forward) {
      starts.push_back(wrap(current + len + 1, circle_size));
      current = (current + 1) % n;
    } else {
      starts.push_back(wrap(current + len, circle_size));
      current = wrap(current - 1, circle_size);
    }
    starts.push_back(static_cast<std::size_t>(current));
  }
  return starts;
}

// Cuts every closed sub-walk, keeping the first visit of each arc.
std::vector<std::size_t> drop_revisits(const std::vector<std::size_t>& starts, std::size_t circle_size) {
  std::vector<long long> position(circle_size, -1);
  std::vector<std::size_t> out;
  for (std::size_t s : starts) {
    if (position[s] >= 0) {
      auto keep = static_cast<std::size_t>(position[s]) + 1;
      for (std::size_t i = keep; i < out.size(); ++i) position[out[i]] = -1;
      out.resize(keep);
    } else {
      position[s] = static_cast<long long>(out.size());
      out.push_back(s);
    }
  }
  return out;
}

// Simple path a -> b of even length in the graph of pairwise disjoint long
// arcs, shortest first, neighbors tried in increasing start order.
bool even_path_search(std::size_t current, std::size_t target, std::size_t remaining, std::size_t circle_size,
                      std::size_t arc_length, std::vector<bool>& visited, std::vector<std::size_t>& path) {
  if (remaining == 0) return current == target;
  for (std::size_t offset = arc_length; offset + arc_length <= circle_size; ++offset) {
    const std::size_t next = (current + offset) % circle_size;
    if (visited[next] || (next == target && remaining != 1)) continue;
    visited[next] = true;
    path.push_back(next);
    if (even_path_search(next, target, remaining - 1, circle_size, arc_length, visited, path)) return true;
    path.pop_back();
    visited[next] = false;
  }
  return false;
}

std::vector<std::size_t> shortest_even_path(std::size_t from, std::size_t to, std::size_t circle_size,
                                            std::size_t arc_length) {
  for (std::size_t length = 2; length <= circle_size; length += 2) {
    std::vector<bool> visited(circle_size, false);
    visited[from] = true;
    std::vector<std::size_t> path{from};
    if (even_path_search(from, to, length, circle_size, arc_length, visited, path)) return path;
  }
  return {};
}

std::string pair_count_message(std::uint64_t available, std::uint64_t required, std::size_t t) {
  return "infeasible: " + std::to_string(available) + " good patterns < C(" + std::to_string(t) + ",2) = " +
         std::to_string(required) + " pairs of branching vertices";
}

OddTopologicalCertificate build_on_circle(const CircleLayout& layout, std::size_t k, std::size_t t,
                                          HostSpec host) {
  const std::size_t circle = layout.size();
  const std::size_t arc_length = long_arc_length(circle);
  const auto patterns = good_patterns(arc_length, k);
  const std::uint64_t required = binomial(static_cast<long long>(t), 2);
  if (patterns.size() < required) throw InfeasibleError(pair_count_message(patterns.size(), required, t), patterns.size(), required);
  if (t > circle) throw InfeasibleError("infeasible: more branching vertices than short arcs", patterns.size(), required);

  std::set<VertexCode> short_arcs;
  for (std::size_t s = 0; s < circle; ++s) short_arcs.insert(arc_elements(layout, {s, k, ArcKind::short_arc}));

  OddTopologicalCertificate cert;
  cert.host = std::move(host);
  for (std::size_t i = 0; i < t; ++i) cert.branching.push_back(arc_elements(layout, {i, k, ArcKind::short_arc}));

  // inner vertex -> (long arc start, pattern index) that produced it
  std::map<VertexCode, std::pair<std::size_t, std::size_t>> origin;
  std::size_t next_pattern = 0;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      const std::size_t pattern_index = next_pattern++;
      const Pattern& pattern = patterns[pattern_index];
      const Arc from{(i + k) % circle, arc_length, ArcKind::long_arc};  // right after x ends
      const Arc to{j, arc_length, ArcKind::long_arc};                   // starts with y
      const auto walk = long_arc_walk(from, to, circle);

      std::vector<VertexCode> path{cert.branching[i]};
      for (std::size_t q = 0; q + 1 < walk.size(); ++q) {
        VertexCode v = pattern_vertex(layout, walk[q], pattern);
        if (short_arcs.count(v)) throw std::logic_error("construction: inner vertex is a short arc");
        auto [it, fresh] = origin.emplace(v, std::make_pair(walk[q].start, pattern_index));
        if (!fresh) throw std::logic_error("construction: inner vertex " + subset_label(v) + " reused");
        path.push_back(std::move(v));
      }
      path.push_back(cert.branching[j]);
      if ((path.size() - 1) % 2 != 1) throw std::logic_error("construction: even path length");
      cert.paths[{i, j}] = std::move(path);
    }
  }
  return cert;
}

}  // namespace

CircleLayout CircleLayout::identity(int n) {
  CircleLayout layout;
  for (int x = 1; x <= n; ++x) layout.order.push_back(x);
  return layout;
}

CircleLayout CircleLayout::odd_first(int n) {
  if (n < 1 || n % 2 == 0) throw ParameterError("odd-first layout needs an odd number of points");
  CircleLayout layout;
  for (int x = 1; x <= n; x += 2) layout.order.push_back(x);
  for (int x = 2; x < n; x += 2) layout.order.push_back(x);
  return layout;
}

std::size_t long_arc_length(std::size_t circle_size) {
  return circle_size == 0 ? 0 : (circle_size - 1) / 2;
}

VertexCode arc_elements(const CircleLayout& layout, const Arc& arc) {
  VertexCode out;
  for (std::size_t p = 0; p < arc.length; ++p) out.push_back(layout.order[(arc.start + p) % layout.size()]);
  std::sort(out.begin(), out.end());
  return out;
}

bool Pattern::is_good() const {
  for (std::size_t i = 0; i < offsets.size(); ++i)
    if (offsets[i] != i) return true;
  return false;
}

std::vector<Pattern> good_patterns(std::size_t arc_length, std::size_t k) {
  std::vector<Pattern> out;
  if (k == 0 || k > arc_length) return out;
  // offset 0 fixed; choose k-1 of 1..arc_length-1 lexicographically
  std::vector<std::size_t> rest(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) rest[i] = i + 1;
  const std::size_t top = arc_length - 1;
  while (true) {
    Pattern p;
    p.offsets.push_back(0);
    p.offsets.insert(p.offsets.end(), rest.begin(), rest.end());
    if (p.is_good()) out.push_back(std::move(p));
    std::size_t i = rest.size();
    while (i > 0 && rest[i - 1] == top - (rest.size() - i)) --i;
    if (i == 0) break;
    ++rest[i - 1];
    for (std::size_t j = i; j < rest.size(); ++j) rest[j] = rest[j - 1] + 1;
  }
  return out;
}

VertexCode pattern_vertex(const CircleLayout& layout, const Arc& long_arc, const Pattern& pattern) {
  VertexCode out;
  for (std::size_t offset : pattern.offsets) out.push_back(layout.order[(long_arc.start + offset) % layout.size()]);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t good_pattern_count(int n, int k) {
  KneserParams params(n, k);
  return binomial((params.n - 3) / 2, params.k - 1) - 1;
}

bool feasible(int n, int k) {
  if (k < 1 || n <= 2 * k) return false;
  const int t = n - 2 * k + 2;
  return t >= 5 && good_pattern_count(n, k) >= binomial(t, 2);
}

std::vector<Arc> long_arc_walk(const Arc& a, const Arc& b, std::size_t circle_size) {
  const std::size_t arc_length = long_arc_length(circle_size);
  if (a.length != arc_length || b.length != arc_length)
    throw ParameterError("long_arc_walk expects long arcs");
  std::vector<std::size_t> starts;
  for (bool forward : {true, false}) {
    starts = drop_revisits(shift_walk(a.start, b.start, circle_size, arc_length, forward), circle_size);
    if ((starts.size() - 1) % 2 == 0) break;
  }
  // Both shift walks fold onto themselves when b is antipodal to a on an
  // even circle.
  if ((starts.size() - 1) % 2 != 0) starts = shortest_even_path(a.start, b.start, circle_size, arc_length);
  if (starts.empty()) throw std::logic_error("long_arc_walk: no even walk found");

  std::vector<Arc> walk;
  for (std::size_t s : starts) walk.push_back({s, arc_length, ArcKind::long_arc});
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    if (!disjoint_arcs(walk[i], walk[i + 1], circle_size))
      throw std::logic_error("long_arc_walk: consecutive arcs intersect");
  return walk;
}

OddTopologicalCertificate build_odd_topological_kneser(int n, int k) {
  KneserParams params(n, k);
  const int t = n - 2 * k + 2;
  if (t < 5) throw InfeasibleError("infeasible: t = n-2k+2 = " + std::to_string(t) + " is below 5", 0, 0);
  const auto available = good_pattern_count(n, k);
  const auto required = binomial(t, 2);
  if (available < required)
    throw InfeasibleError(pair_count_message(available, required, static_cast<std::size_t>(t)), available, required);
  return build_on_circle(CircleLayout::identity(params.n), static_cast<std::size_t>(params.k),
                         static_cast<std::size_t>(t), kneser_host(n, k));
}

OddTopologicalCertificate build_odd_topological_schrijver(int n, int k) {
  KneserParams params(n, k);
  const int t = n - 2 * k + 2;
  if (t < 5) throw InfeasibleError("infeasible: t = n-2k+2 = " + std::to_string(t) + " is below 5", 0, 0);
  // Even n: drop the point n and run on the odd circle 1..n-1.
  const int points = n % 2 == 1 ? n : n - 1;
  const auto layout = CircleLayout::odd_first(points);
  const auto arc_length = long_arc_length(layout.size());
  if (static_cast<std::size_t>(k) > arc_length)
    throw InfeasibleError("infeasible: k exceeds the long-arc length on " + std::to_string(points) + " points", 0, 0);
  const auto available = binomial(static_cast<long long>(arc_length) - 1, k - 1) - 1;
  const auto required = binomial(t, 2);
  if (available < required)
    throw InfeasibleError(pair_count_message(available, required, static_cast<std::size_t>(t)), available, required);
  return build_on_circle(layout, static_cast<std::size_t>(k), static_cast<std::size_t>(t), schrijver_host(n, k));
}

}  // namespace topochrom
