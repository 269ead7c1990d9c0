#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "topochrom/error.hpp"
#include "topochrom/generators.hpp"

using namespace topochrom;

namespace {

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(25, 11) == 4457400);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("subset rank matches enumeration order") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) {
      auto subsets = k_subsets(n, k);
      CHECK(subsets.size() == binomial(n, k));
      CHECK(std::is_sorted(subsets.begin(), subsets.end()));
      for (std::size_t i = 0; i < subsets.size(); ++i) CHECK(subset_rank(subsets[i], n) == i);
    }
}

TEST_CASE("kneser examples") {
  auto p = kneser(5, 2);
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(p.label(0) == "{1,2}");
  CHECK(p.label(9) == "{4,5}");

  CHECK_THROWS_AS(kneser(4, 2), ParameterError);
  CHECK_THROWS_AS(kneser(5, 0), ParameterError);

  auto g = kneser(6, 2);
  CHECK(g.order() == 15);
  CHECK(g.size() == 45);

  CHECK_THROWS_AS(kneser(25, 11), CapacityError);
  CHECK_THROWS_AS(kneser(10, 3, 100), CapacityError);
}

TEST_CASE("kneser agrees with brute-force disjointness, n <= 12") {
  for (int n = 3; n <= 12; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      if (binomial(n, k) > 400) continue;
      auto g = kneser(n, k);
      auto subsets = k_subsets(n, k);
      REQUIRE(g.order() == binomial(n, k));
      std::size_t edges = 0;
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        CHECK(g.degree(static_cast<Vertex>(i)) == binomial(n - k, k));
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
          bool d = disjoint(subsets[i], subsets[j]);
          edges += d;
          CHECK(g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == d);
        }
      }
      CHECK(g.size() == edges);
    }
  // Larger instances: regularity only.
  for (auto [n, k] : {std::pair{12, 3}, std::pair{12, 4}, std::pair{11, 5}}) {
    auto g = kneser(n, k);
    CHECK(g.order() == binomial(n, k));
    for (Vertex v = 0; v < g.order(); ++v) CHECK(g.degree(v) == binomial(n - k, k));
  }
}

TEST_CASE("kneser oracle") {
  auto o = kneser_oracle(25, 11);
  std::vector<int> a, b, c;
  for (int i = 1; i <= 11; ++i) a.push_back(i);
  for (int i = 12; i <= 22; ++i) b.push_back(i);
  for (int i = 11; i <= 21; ++i) c.push_back(i);
  CHECK(o.adjacent(a, b));
  CHECK_FALSE(o.adjacent(a, c));
  CHECK_FALSE(o.adjacent(a, a));
  CHECK_FALSE(o.is_vertex(std::vector<int>{1, 2}));
  CHECK_FALSE(o.is_vertex(std::vector<int>{2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11}));
  CHECK(o.describe() == "KG(25,11)");
  CHECK_THROWS_AS(kneser_oracle(22, 11), ParameterError);

  auto small = kneser_oracle(5, 2);
  auto g = kneser(5, 2);
  auto subsets = k_subsets(5, 2);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j)
      CHECK(small.adjacent(subsets[i], subsets[j]) ==
            g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)));
}

TEST_CASE("schrijver examples") {
  auto s5 = schrijver(5, 2);
  CHECK(s5.order() == 5);
  std::vector<std::string> labels(s5.labels().begin(), s5.labels().end());
  CHECK(labels == std::vector<std::string>{"{1,3}", "{1,4}", "{2,4}", "{2,5}", "{3,5}"});
  CHECK(degree_sequence(s5) == std::vector<std::size_t>(5, 2));
  CHECK(is_connected(s5));

  CHECK(schrijver(7, 2).order() == 14);

  auto o = schrijver_oracle(25, 11);
  CHECK(o.describe() == "SG(25,11)");
  CHECK_FALSE(o.is_vertex(std::vector<int>{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 25}));
  CHECK(o.is_vertex(std::vector<int>{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 24}));
}

TEST_CASE("schrijver is the filtered induced subgraph of kneser, n <= 10") {
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      auto kg = kneser(n, k);
      auto sg = schrijver(n, k);
      auto subsets = k_subsets(n, k);
      std::vector<Vertex> keep;
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        const auto& s = subsets[i];
        bool stable = true;
        for (int x : s) {
          int next = x == n ? 1 : x + 1;
          if (std::find(s.begin(), s.end(), next) != s.end()) stable = false;
        }
        if (stable) keep.push_back(static_cast<Vertex>(i));
      }
      auto expected = induced_subgraph(kg, keep);
      REQUIRE(sg.order() == expected.order());
      CHECK(std::equal(sg.edges().begin(), sg.edges().end(), expected.edges().begin(),
                       expected.edges().end()));
      auto oracle = kneser_oracle(n, k);
      for (Vertex v = 0; v < sg.order(); ++v) CHECK(oracle.is_vertex(subsets[keep[v]]));
    }
}

TEST_CASE("mycielskian examples") {
  auto k2 = complete_graph(2);
  auto c5 = mycielskian(k2, 2);
  CHECK(c5.order() == 5);
  CHECK(c5.size() == 5);
  CHECK(degree_sequence(c5) == std::vector<std::size_t>(5, 2));
  CHECK(is_connected(c5));
  CHECK(c5.label(4) == "z");
  CHECK(c5.label(2) == "(0,1)");

  auto grotzsch = mycielskian(cycle_graph(5), 2);
  CHECK(grotzsch.order() == 11);
  CHECK(grotzsch.size() == 20);

  auto tri = mycielskian(k2, 1);
  CHECK(tri.order() == 3);
  CHECK(tri.size() == 3);

  CHECK_THROWS_AS(mycielskian(k2, 0), ParameterError);
}

TEST_CASE("mycielskian matches the definition on random graphs") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = testing::random_graph(1 + rng() % 7, 0.5, rng);
    const std::size_t r = 1 + rng() % 4;
    auto m = mycielskian(g, r);
    const std::size_t n = g.order();
    CHECK(m.order() == r * n + 1);
    CHECK(m.size() == g.size() * (2 * r - 1) + n);
    const auto z = static_cast<Vertex>(r * n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = 0; v < n; ++v) {
            bool expected = g.adjacent(u, v) &&
                            ((i == 0 && j == 0) || (i > j ? i - j : j - i) == 1);
            CHECK(m.adjacent(static_cast<Vertex>(i * n + u), static_cast<Vertex>(j * n + v)) ==
                  expected);
          }
    for (Vertex x = 0; x < z; ++x) CHECK(m.adjacent(x, z) == (x / n == r - 1));
  }
}

TEST_CASE("total graph examples") {
  auto t3 = total_graph(complete_graph(3));
  CHECK(t3.order() == 6);
  CHECK(t3.size() == 12);
  CHECK(degree_sequence(t3) == std::vector<std::size_t>(6, 4));

  auto t2 = total_graph(complete_graph(2));
  CHECK(t2.size() == 3);
  CHECK(t2.label(2) == "e{0,1}");

  auto t0 = total_graph(make_graph(4, {}));
  CHECK(t0.order() == 4);
  CHECK(t0.size() == 0);
}

TEST_CASE("total graph matches the definition on random graphs") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = testing::random_graph(1 + rng() % 8, 0.4, rng);
    auto t = total_graph(g);
    const std::size_t n = g.order();
    REQUIRE(t.order() == n + g.size());
    auto es = g.edges();
    for (Vertex x = 0; x < t.order(); ++x)
      for (Vertex y = 0; y < t.order(); ++y) {
        bool expected;
        if (x < n && y < n) {
          expected = g.adjacent(x, y);
        } else if (x >= n && y >= n) {
          auto e = es[x - n], f = es[y - n];
          expected = x != y && (e.first == f.first || e.first == f.second ||
                                e.second == f.first || e.second == f.second);
        } else {
          Vertex v = x < n ? x : y;
          auto e = es[(x < n ? y : x) - n];
          expected = e.first == v || e.second == v;
        }
        CHECK(t.adjacent(x, y) == expected);
      }
    for (Vertex v = 0; v < n; ++v) CHECK(t.degree(v) == 2 * g.degree(v));
    for (std::size_t e = 0; e < es.size(); ++e)
      CHECK(t.degree(static_cast<Vertex>(n + e)) == g.degree(es[e].first) + g.degree(es[e].second));
  }
}

TEST_CASE("standard graphs") {
  CHECK(standard_graph("complete", std::vector<int>{4}).size() == 6);
  auto c5 = standard_graph("cycle", std::vector<int>{5});
  CHECK(c5.size() == 5);
  CHECK(degree_sequence(c5) == std::vector<std::size_t>(5, 2));
  CHECK(standard_graph("complete_bipartite", std::vector<int>{2, 3}).size() == 6);
  CHECK(standard_graph("path", std::vector<int>{4}).size() == 3);
  CHECK(standard_graph("petersen", {}).size() == 15);
  CHECK_THROWS_AS(standard_graph("wheel", std::vector<int>{5}), ParameterError);
  CHECK_THROWS_AS(standard_graph("cycle", std::vector<int>{5, 6}), ParameterError);
}
