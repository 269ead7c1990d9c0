#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "topochrom/graph.hpp"

namespace topochrom {

struct SolverLimits {
  // Exact search cap; the solver works on 64-bit vertex masks, so values
  // above 64 are clamped.
  std::size_t vertex_cap = 40;
};

struct ChromaticResult {
  std::size_t chi = 0;
  Coloring witness;  // proper, colors 0..chi-1
};

// Exact chromatic number: maximum-clique lower bound, then DSATUR
// backtracking for k = omega, omega + 1, ... until a k-coloring exists.
// The clique is pre-colored to break symmetry. Throws CapacityError above
// the cap.
ChromaticResult chromatic_number(const Graph& g, SolverLimits limits = {});

// Maximum clique by branch and bound with a greedy-coloring bound.
std::vector<Vertex> maximum_clique(const Graph& g, SolverLimits limits = {});

// Maximum independent set (clique of the complement).
std::vector<Vertex> maximum_independent_set(const Graph& g, SolverLimits limits = {});
std::size_t independence_number(const Graph& g, SolverLimits limits = {});

// chi(T(G)).
std::size_t total_chromatic_number(const Graph& g, SolverLimits limits = {});

struct Rational {
  std::int64_t num;
  std::int64_t den;

  friend bool operator==(const Rational&, const Rational&) = default;
};

// n / k in lowest terms. Throws ParameterError unless n > 2k >= 2.
Rational kneser_fractional_chromatic(int n, int k);

}  // namespace topochrom
