#include "topochrom/box_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "topochrom/error.hpp"
#include "topochrom/gf2.hpp"

namespace topochrom {

namespace {

constexpr std::size_t box_hard_cap = 32;

int dim_of(Simplex s) { return std::popcount(s) - 1; }

using GraphMask = std::uint32_t;

std::vector<GraphMask> neighborhood_masks(const Graph& g) {
  std::vector<GraphMask> out(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    out[u] |= GraphMask{1} << v;
    out[v] |= GraphMask{1} << u;
  }
  return out;
}

SimplicialComplex build_box(const Graph& g, BoxComplexOptions options, bool drop_condition) {
  const std::size_t n = g.order();
  const std::size_t cap = std::min(options.vertex_cap, box_hard_cap);
  if (n > cap)
    throw CapacityError("box complex of a " + std::to_string(n) + "-vertex graph exceeds the cap of " +
                        std::to_string(cap) + " vertices");
  const auto nb = neighborhood_masks(g);
  const GraphMask everyone = n == 32 ? ~GraphMask{0} : (GraphMask{1} << n) - 1;

  std::vector<Simplex> simplices;
  auto emit = [&](GraphMask a, GraphMask b) {
    simplices.push_back(Simplex{a} | (Simplex{b} << n));
  };

  // Depth-first over nonempty A in increasing vertex order with its common
  // neighborhood; B(G) prunes once the common neighborhood is empty.
  auto visit = [&](auto&& self, GraphMask a, GraphMask common, Vertex from) -> void {
    for (Vertex v = from; v < n; ++v) {
      GraphMask a2 = a | (GraphMask{1} << v);
      GraphMask common2 = common & nb[v];
      if (!drop_condition && common2 == 0) continue;
      // one-sided simplices A (+) {} and {} (+) A
      emit(a2, 0);
      emit(0, a2);
      // two-sided: every nonempty B within the common neighborhood
      for (GraphMask b = common2; b != 0; b = (b - 1) & common2) emit(a2, b);
      self(self, a2, common2, v + 1);
    }
  };
  visit(visit, 0, everyone, 0);

  std::vector<std::uint32_t> involution(2 * n);
  std::vector<BoxVertex> labels(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    involution[v] = static_cast<std::uint32_t>(n + v);
    involution[n + v] = v;
    labels[v] = {v, 1};
    labels[n + v] = {v, 2};
  }
  return SimplicialComplex::from_closed(2 * n, std::move(simplices), std::move(involution),
                                        std::move(labels));
}

std::vector<long long> trim(std::vector<long long> v, std::size_t keep = 0) {
  while (v.size() > keep && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

SimplicialComplex SimplicialComplex::closure(std::size_t vertex_count, std::span<const Simplex> faces,
                                             std::vector<std::uint32_t> involution) {
  std::unordered_set<Simplex> all;
  for (Simplex face : faces)
    for (Simplex sub = face; sub != 0; sub = (sub - 1) & face) all.insert(sub);
  return from_closed(vertex_count, {all.begin(), all.end()}, std::move(involution));
}

SimplicialComplex SimplicialComplex::from_closed(std::size_t vertex_count, std::vector<Simplex> simplices,
                                                 std::vector<std::uint32_t> involution,
                                                 std::vector<BoxVertex> labels) {
  if (vertex_count > 64) throw CapacityError("simplicial complexes are limited to 64 vertices");
  if (!involution.empty() && involution.size() != vertex_count)
    throw ParameterError("involution must cover every vertex");
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  for (Simplex s : simplices) {
    if (s == 0) continue;
    if (vertex_count < 64 && (s >> vertex_count) != 0)
      throw ParameterError("simplex uses a vertex outside the complex");
    auto d = static_cast<std::size_t>(dim_of(s));
    if (k.by_dim_.size() <= d) k.by_dim_.resize(d + 1);
    k.by_dim_[d].push_back(s);
  }
  for (auto& level : k.by_dim_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  k.involution_ = std::move(involution);
  k.box_vertices_ = std::move(labels);
  return k;
}

std::span<const Simplex> SimplicialComplex::simplices(int dim) const {
  if (dim < 0 || static_cast<std::size_t>(dim) >= by_dim_.size()) return {};
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t total = 0;
  for (const auto& level : by_dim_) total += level.size();
  return total;
}

bool SimplicialComplex::contains(Simplex s) const {
  auto level = simplices(dim_of(s));
  return std::binary_search(level.begin(), level.end(), s);
}

Simplex SimplicialComplex::apply_involution(Simplex s) const {
  Simplex image = 0;
  for (Simplex rest = s; rest != 0; rest &= rest - 1)
    image |= Simplex{1} << involution_.at(static_cast<std::size_t>(std::countr_zero(rest)));
  return image;
}

bool SimplicialComplex::is_downward_closed() const {
  for (std::size_t d = 1; d < by_dim_.size(); ++d)
    for (Simplex s : by_dim_[d])
      for (Simplex rest = s; rest != 0; rest &= rest - 1)
        if (!contains(s & ~(rest & -rest))) return false;
  return true;
}

bool SimplicialComplex::has_valid_involution() const {
  if (involution_.size() != vertex_count_) return false;
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    auto image = involution_[v];
    if (image >= vertex_count_ || image == v || involution_[image] != v) return false;
  }
  for (const auto& level : by_dim_)
    for (Simplex s : level)
      if (!contains(apply_involution(s))) return false;
  return true;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[d].size());
  return chi;
}

SimplicialComplex box_complex(const Graph& g, BoxComplexOptions options) {
  return build_box(g, options, false);
}

SimplicialComplex box_complex0(const Graph& g, BoxComplexOptions options) {
  return build_box(g, options, true);
}

BettiSequence betti_gf2(const SimplicialComplex& k, bool reduced) {
  BettiSequence result;
  result.reduced = reduced;
  if (k.empty()) {
    result.empty_complex = true;
    return result;
  }
  const int top = k.dimension();
  // rank of the boundary map from dimension d to d-1; zero for d = 0
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top) + 2, 0);
  for (int d = 1; d <= top; ++d) {
    auto faces = k.simplices(d - 1);
    std::vector<gf2::SparseColumn> columns;
    columns.reserve(k.face_count(d));
    for (Simplex s : k.simplices(d)) {
      gf2::SparseColumn col;
      for (Simplex rest = s; rest != 0; rest &= rest - 1) {
        Simplex facet = s & ~(rest & -rest);
        auto it = std::lower_bound(faces.begin(), faces.end(), facet);
        if (it == faces.end() || *it != facet)
          throw std::logic_error("betti_gf2: complex is not downward closed");
        col.push_back(static_cast<std::uint32_t>(it - faces.begin()));
      }
      std::sort(col.begin(), col.end());
      columns.push_back(std::move(col));
    }
    boundary_rank[static_cast<std::size_t>(d)] = gf2::sparse_column_rank(std::move(columns));
  }

  std::vector<long long> betti(static_cast<std::size_t>(top) + 1);
  long long alternating = 0;
  for (int d = 0; d <= top; ++d) {
    auto du = static_cast<std::size_t>(d);
    betti[du] = static_cast<long long>(k.face_count(d)) - static_cast<long long>(boundary_rank[du]) -
                static_cast<long long>(boundary_rank[du + 1]);
    alternating += (d % 2 == 0 ? 1 : -1) * betti[du];
  }
  if (alternating != k.euler_characteristic())
    throw std::logic_error("betti_gf2: Euler characteristic mismatch");
  if (reduced) betti[0] -= 1;
  result.values = trim(std::move(betti), 1);
  return result;
}

std::vector<long long> reduced_betti_from_minus_one(const SimplicialComplex& k) {
  auto b = betti_gf2(k, true);
  if (b.empty_complex) return {1};
  std::vector<long long> out{0};
  out.insert(out.end(), b.values.begin(), b.values.end());
  return trim(std::move(out));
}

std::vector<long long> betti_convolution(std::span<const long long> a, std::span<const long long> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(std::move(out), 1);
}

bool check_suspension(const Graph& g, BoxComplexOptions options) {
  auto plain = reduced_betti_from_minus_one(box_complex(g, options));
  auto zero = reduced_betti_from_minus_one(box_complex0(g, options));
  std::vector<long long> shifted{0};
  shifted.insert(shifted.end(), plain.begin(), plain.end());
  return trim(std::move(shifted)) == zero;
}

bool check_kunneth_product(const Graph& f, const Graph& g, BoxComplexOptions options) {
  auto bf = betti_gf2(box_complex(f, options));
  auto bg = betti_gf2(box_complex(g, options));
  if (bf.empty_complex || bg.empty_complex)
    throw ParameterError("Kunneth check needs nonempty box complexes");
  auto product = betti_gf2(box_complex(direct_product(f, g), options));
  return product.values == betti_convolution(bf.values, bg.values);
}

}  // namespace topochrom
