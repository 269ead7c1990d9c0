#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "topochrom/chromatic.hpp"
#include "topochrom/error.hpp"
#include "topochrom/generators.hpp"
#include "topochrom/report.hpp"

using namespace topochrom;

namespace {

void check_result(const Graph& g, const ChromaticResult& r) {
  REQUIRE(r.witness.size() == g.order());
  CHECK(is_proper_coloring(g, r.witness));
  for (auto c : r.witness) CHECK(c < r.chi);
}

bool is_clique(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("chromatic number examples") {
  auto p = chromatic_number(kneser(5, 2));
  CHECK(p.chi == 3);
  check_result(kneser(5, 2), p);

  auto s72 = schrijver(7, 2);
  auto s = chromatic_number(s72);
  CHECK(s.chi == 5);
  check_result(s72, s);

  auto grotzsch = mycielskian(cycle_graph(5), 2);
  auto gr = chromatic_number(grotzsch);
  CHECK(gr.chi == 4);
  check_result(grotzsch, gr);

  CHECK(chromatic_number(make_graph(0, {})).chi == 0);
  CHECK(chromatic_number(make_graph(3, {})).chi == 1);
  CHECK(chromatic_number(complete_graph(6)).chi == 6);
  CHECK_THROWS_AS(chromatic_number(complete_graph(41)), CapacityError);
}

TEST_CASE("chromatic number agrees with brute force") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_graph(1 + rng() % 8, (rng() % 100) / 100.0, rng);
    auto r = chromatic_number(g);
    CHECK(r.chi == testing::brute_chromatic(g));
    check_result(g, r);
  }
}

TEST_CASE("Kneser and Schrijver graphs have chi = n - 2k + 2") {
  for (int n = 3; n <= 9; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      if (binomial(n, k) > 40) continue;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(chromatic_number(kneser(n, k)).chi == static_cast<std::size_t>(n - 2 * k + 2));
      CHECK(chromatic_number(schrijver(n, k)).chi == static_cast<std::size_t>(n - 2 * k + 2));
    }
}

TEST_CASE("maximum clique and independence") {
  CHECK(independence_number(petersen_graph()) == 4);
  CHECK(independence_number(cycle_graph(5)) == 2);
  for (std::size_t n = 1; n <= 7; ++n) CHECK(independence_number(complete_graph(n)) == 1);

  std::mt19937 rng(55);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = testing::random_graph(1 + rng() % 10, 0.5, rng);
    auto is = maximum_independent_set(g);
    CHECK(is.size() == testing::brute_independence(g));
    for (std::size_t i = 0; i < is.size(); ++i)
      for (std::size_t j = i + 1; j < is.size(); ++j) CHECK_FALSE(g.adjacent(is[i], is[j]));
    auto clique = maximum_clique(g);
    CHECK(is_clique(g, clique));
  }
}

TEST_CASE("fractional chromatic number of Kneser graphs") {
  CHECK(kneser_fractional_chromatic(5, 2) == Rational{5, 2});
  CHECK(kneser_fractional_chromatic(6, 2) == Rational{3, 1});
  CHECK(kneser_fractional_chromatic(25, 11) == Rational{25, 11});
  CHECK_THROWS_AS(kneser_fractional_chromatic(4, 2), ParameterError);

  // Vertex-transitive: chi_f = |V| / alpha, with alpha = C(n-1, k-1).
  for (auto [n, k] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{7, 2}, std::pair{7, 3}, std::pair{8, 3}}) {
    auto g = kneser(n, k);
    auto alpha = independence_number(g, {.vertex_cap = 64});
    CHECK(alpha == binomial(n - 1, k - 1));
    auto f = kneser_fractional_chromatic(n, k);
    CHECK(f.num * static_cast<std::int64_t>(alpha) == static_cast<std::int64_t>(g.order()) * f.den);
  }
}

TEST_CASE("total chromatic number") {
  CHECK(total_chromatic_number(complete_graph(3)) == 3);
  CHECK(total_chromatic_number(complete_graph(2)) == 3);
  CHECK(total_chromatic_number(cycle_graph(4)) <= 4);
  CHECK(total_chromatic_number(cycle_graph(4)) == testing::brute_chromatic(total_graph(cycle_graph(4))));
}

TEST_CASE("chromatic number of products and Mycielskians") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = testing::random_graph(2 + rng() % 4, 0.6, rng);
    auto g = testing::random_graph(2 + rng() % 4, 0.6, rng);
    auto chi_fg = chromatic_number(direct_product(f, g)).chi;
    CHECK(chi_fg <= std::min(chromatic_number(f).chi, chromatic_number(g).chi));

    auto h = testing::random_graph(2 + rng() % 5, 0.5, rng);
    auto chi = chromatic_number(h).chi;
    auto chi_m = chromatic_number(mycielskian(h, 2)).chi;
    CHECK(chi_m >= chi);
    CHECK(chi_m <= chi + 1);
  }
  CHECK(chromatic_number(mycielskian(complete_graph(2), 2)).chi == 3);
  CHECK(chromatic_number(mycielskian(cycle_graph(5), 2)).chi == 4);
}

TEST_CASE("bound report") {
  auto p = petersen_graph();
  auto report = bound_report(p, {.family_lower_bound = 3});
  CHECK(report.bipartite_bound == 3);
  CHECK(report.chromatic == 3u);
  REQUIRE(report.betti);
  CHECK_FALSE(report.ind_box);
  CHECK_FALSE(report.coind_box0);
  auto j = to_json(report);
  CHECK(j.size() == 3);
  CHECK(j["bipartite_bound"] == 3);
  CHECK(j["chromatic"] == 3);

  CHECK_THROWS_AS(bound_report(p, {.family_lower_bound = 4}), std::logic_error);

  auto big = bound_report(cycle_graph(45));
  CHECK_FALSE(big.chromatic);
  CHECK_FALSE(big.betti);
  CHECK(to_json(big)["betti"].is_null());
}
