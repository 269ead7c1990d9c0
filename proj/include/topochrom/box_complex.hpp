#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "topochrom/graph.hpp"

namespace topochrom {

// A simplex as a bitmask over the complex's vertex indices (at most 64).
using Simplex = std::uint64_t;

// Vertex (v, side) of a box complex, side 1 or 2. In box complexes built
// from a graph on n vertices, (v, 1) has index v and (v, 2) has index n + v.
struct BoxVertex {
  Vertex vertex;
  std::uint8_t side;
};

// Abstract simplicial complex with an optional vertex involution, stored as
// sorted simplex masks per dimension.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Downward closure of `faces`. `involution` may be empty; otherwise it is
  // a permutation of 0..vertex_count-1.
  static SimplicialComplex closure(std::size_t vertex_count, std::span<const Simplex> faces,
                                   std::vector<std::uint32_t> involution = {});

  // Takes an already closed simplex list (checked by is_downward_closed()).
  static SimplicialComplex from_closed(std::size_t vertex_count, std::vector<Simplex> simplices,
                                       std::vector<std::uint32_t> involution = {},
                                       std::vector<BoxVertex> labels = {});

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  bool empty() const noexcept { return by_dim_.empty(); }
  // -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

  std::span<const Simplex> simplices(int dim) const;
  std::size_t face_count(int dim) const { return simplices(dim).size(); }
  std::size_t simplex_count() const;
  bool contains(Simplex s) const;

  std::span<const BoxVertex> box_vertices() const noexcept { return box_vertices_; }
  std::span<const std::uint32_t> involution() const noexcept { return involution_; }
  Simplex apply_involution(Simplex s) const;

  bool is_downward_closed() const;
  // Involutive, fixed-point free on vertices, and simplicial.
  bool has_valid_involution() const;

  long long euler_characteristic() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::uint32_t> involution_;
  std::vector<BoxVertex> box_vertices_;
};

struct BoxComplexOptions {
  // Graph vertex cap; hard limit 32 (two copies must fit a 64-bit mask).
  std::size_t vertex_cap = 10;
};

// B(G): A (+) B is a simplex iff every A-B pair is an edge and, when one
// side is empty, the other side has a common neighbor.
SimplicialComplex box_complex(const Graph& g, BoxComplexOptions options = {});

// B0(G): like B(G) with every one-sided A (+) {} and {} (+) B admitted.
SimplicialComplex box_complex0(const Graph& g, BoxComplexOptions options = {});

// Betti numbers over GF(2), trailing zeros trimmed (at least beta_0 kept for
// a nonempty complex). Reduced sequences subtract 1 from beta_0. The empty
// complex gives an empty sequence with empty_complex set, which in reduced
// homology stands for beta~_{-1} = 1.
struct BettiSequence {
  std::vector<long long> values;
  bool reduced = false;
  bool empty_complex = false;

  friend bool operator==(const BettiSequence&, const BettiSequence&) = default;
};

// Throws std::logic_error if the alternating Betti sum disagrees with the
// Euler characteristic from face counts.
BettiSequence betti_gf2(const SimplicialComplex& k, bool reduced = false);

// Reduced Betti numbers indexed from dimension -1, trailing zeros trimmed.
std::vector<long long> reduced_betti_from_minus_one(const SimplicialComplex& k);

// Cauchy product of two Betti sequences, trailing zeros trimmed.
std::vector<long long> betti_convolution(std::span<const long long> a, std::span<const long long> b);

// Reduced homology of B0(G) equals that of B(G) shifted up one dimension.
bool check_suspension(const Graph& g, BoxComplexOptions options = {});

// Betti numbers of B(F x G) equal the convolution of those of B(F) and B(G).
// Throws ParameterError when B(F) or B(G) is empty.
bool check_kunneth_product(const Graph& f, const Graph& g, BoxComplexOptions options = {});

}  // namespace topochrom
