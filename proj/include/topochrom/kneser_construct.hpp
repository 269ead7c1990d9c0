#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "topochrom/minors.hpp"
#include "topochrom/oracle.hpp"

namespace topochrom {

// Points of the ground set in circle order: order[p] is the element at
// position p.
struct CircleLayout {
  std::vector<int> order;

  std::size_t size() const noexcept { return order.size(); }

  static CircleLayout identity(int n);
  // 1, 3, 5, ..., n, 2, 4, ..., n-1 for odd n. No two cyclically
  // consecutive elements of {1..n} fall within floor((n-1)/2) consecutive
  // positions.
  static CircleLayout odd_first(int n);
};

enum class ArcKind { short_arc, long_arc };

// `length` cyclically consecutive circle positions starting at `start`.
struct Arc {
  std::size_t start;
  std::size_t length;
  ArcKind kind;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Long-arc length floor((n-1)/2).
std::size_t long_arc_length(std::size_t circle_size);

// Sorted elements covered by the arc.
VertexCode arc_elements(const CircleLayout& layout, const Arc& arc);

// k offsets within a long arc, increasing, starting with 0. Good unless it is
// the initial segment {0, ..., k-1}.
struct Pattern {
  std::vector<std::size_t> offsets;

  bool is_good() const;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Good patterns of size k in a long arc of length `arc_length`, in
// lexicographic order of offset sets.
std::vector<Pattern> good_patterns(std::size_t arc_length, std::size_t k);

// The k-subset a pattern picks out of a long arc.
VertexCode pattern_vertex(const CircleLayout& layout, const Arc& long_arc, const Pattern& pattern);

// C(floor((n-3)/2), k-1) - 1. Throws ParameterError unless n > 2k >= 2.
std::uint64_t good_pattern_count(int n, int k);

// t = n - 2k + 2 >= 5 and good_pattern_count(n, k) >= C(t, 2).
bool feasible(int n, int k);

// Long arcs a = s_0, ..., s_r = b with consecutive arcs disjoint and r even,
// no arc repeated. Built from two-step shifts by +1 (s -> s+l+1 -> s+1); a
// walk that wraps around is cut at its first revisit, and when that makes r
// odd the shifts by -1 (s -> s+l -> s-1) are used instead. If both fold up
// (b antipodal to a on an even circle), the shortest simple even path in the
// disjointness graph of long arcs is used.
std::vector<Arc> long_arc_walk(const Arc& a, const Arc& b, std::size_t circle_size);

// Raised when the pattern inequality fails; carries both sides.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, std::uint64_t available, std::uint64_t required)
      : std::runtime_error(what), available_(available), required_(required) {}

  std::uint64_t available() const noexcept { return available_; }
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t available_;
  std::uint64_t required_;
};

// Odd topological K_t in KG(n, k), t = n - 2k + 2. Branching vertices are
// the short arcs at positions 0..t-1; pair (x, y) gets the next good pattern
// and the path x, p(s_0), ..., p(s_{r-1}), y along the walk from the long
// arc just after x to the long arc starting at y. Throws InfeasibleError.
OddTopologicalCertificate build_odd_topological_kneser(int n, int k);

// Same construction on the odd-first layout, so that every vertex used lies
// in SG(n, k). For even n the point n is dropped and t branching vertices
// are placed on the remaining n - 1 points.
OddTopologicalCertificate build_odd_topological_schrijver(int n, int k);

}  // namespace topochrom
