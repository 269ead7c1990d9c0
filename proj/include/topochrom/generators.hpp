#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topochrom/graph.hpp"
#include "topochrom/oracle.hpp"

namespace topochrom {

inline constexpr std::size_t default_materialization_cap = 1'000'000;

// C(n, k) with saturation at UINT64_MAX; 0 when k > n or either is negative.
std::uint64_t binomial(long long n, long long k);

// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

// Lexicographic rank of a sorted k-subset of {1..n} within k_subsets(n, k).
std::uint64_t subset_rank(std::span<const int> subset, int n);

// True iff the subset contains no two cyclically consecutive elements of
// {1..n} (neither {i, i+1} nor {1, n}).
bool is_stable_subset(std::span<const int> subset, int n);

// "{1,3,7}"
std::string subset_label(std::span<const int> subset);

// Validated Kneser-family parameters: n >= 2k + 1, k >= 1.
struct KneserParams {
  int n;
  int k;

  KneserParams(int n, int k);
};

enum class SubsetFamily { kneser, schrijver };

// Implicit KG(n, k) or SG(n, k). Vertices are sorted k-subsets of {1..n};
// adjacency is disjointness.
class KneserOracle final : public AdjacencyOracle {
 public:
  KneserOracle(KneserParams params, SubsetFamily family);

  bool is_vertex(std::span<const int> v) const override;
  bool adjacent(std::span<const int> u, std::span<const int> v) const override;
  std::string describe() const override;

  KneserParams params() const noexcept { return params_; }
  SubsetFamily family() const noexcept { return family_; }

 private:
  KneserParams params_;
  SubsetFamily family_;
};

KneserOracle kneser_oracle(int n, int k);
KneserOracle schrijver_oracle(int n, int k);

// Explicit KG(n, k): vertices are the k-subsets in lexicographic order,
// labelled "{...}". Throws CapacityError when C(n, k) exceeds `cap`.
Graph kneser(int n, int k, std::size_t cap = default_materialization_cap);

// Explicit SG(n, k), the induced subgraph of KG(n, k) on stable subsets,
// kept in lexicographic order.
Graph schrijver(int n, int k, std::size_t cap = default_materialization_cap);

// Generalized Mycielskian M_r(G). Vertex (v, i) has id i * |V(G)| + v for
// levels i = 0..r-1, the apex z comes last. Labels are "(label,i)" and "z".
Graph mycielskian(const Graph& g, std::size_t levels);

// Total graph T(G): vertices of G first (same ids), then one vertex per edge
// in G's sorted edge order.
Graph total_graph(const Graph& g);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();

// Named lookup used by the CLI and certificate hosts: "complete" [n],
// "cycle" [n], "path" [n], "complete_bipartite" [a, b], "petersen" [].
Graph standard_graph(std::string_view name, std::span<const int> params);

}  // namespace topochrom
