#include <doctest.h>

#include <random>
#include <sstream>

#include "support/oracles.hpp"
#include "topochrom/enumeration.hpp"
#include "topochrom/error.hpp"
#include "topochrom/generators.hpp"
#include "topochrom/graph.hpp"
#include "topochrom/graph_io.hpp"
#include "topochrom/oracle.hpp"

using namespace topochrom;

TEST_CASE("make_graph normalizes and validates") {
  std::vector<Edge> triangle{{0, 1}, {1, 2}, {0, 2}};
  auto k3 = make_graph(3, triangle);
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  CHECK(k3.adjacent(2, 0));

  std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(make_graph(2, loop), ParameterError);
  std::vector<Edge> out_of_range{{0, 3}};
  CHECK_THROWS_AS(make_graph(3, out_of_range), ParameterError);

  std::vector<Edge> dup{{0, 1}, {0, 1}, {1, 2}, {1, 0}};
  auto g = make_graph(5, dup);
  CHECK(g.size() == 2);
  CHECK(g.edges()[0] == Edge{0, 1});

  CHECK_THROWS_AS(make_graph(2, {}, {"only one"}), ParameterError);
}

TEST_CASE("max_degree") {
  CHECK(max_degree(complete_graph(3)) == 2);
  CHECK(max_degree(cycle_graph(5)) == 2);
  CHECK(max_degree(petersen_graph()) == 3);
  CHECK(max_degree(make_graph(4, {})) == 0);
}

TEST_CASE("is_proper_coloring") {
  auto k3 = complete_graph(3);
  CHECK(is_proper_coloring(k3, std::vector<std::uint32_t>{0, 1, 2}));
  CHECK_FALSE(is_proper_coloring(k3, std::vector<std::uint32_t>{0, 0, 1}));
  CHECK(is_proper_coloring(cycle_graph(5), std::vector<std::uint32_t>{0, 1, 0, 1, 2}));
  CHECK_THROWS_AS(is_proper_coloring(k3, std::vector<std::uint32_t>{0, 1}), ParameterError);
}

TEST_CASE("is_homomorphism") {
  auto c5 = cycle_graph(5);
  auto k3 = complete_graph(3);
  CHECK(is_homomorphism(c5, k3, std::vector<Vertex>{0, 1, 0, 1, 2}));

  auto k2 = complete_graph(2);
  for (Vertex a = 0; a < 2; ++a)
    for (Vertex b = 0; b < 2; ++b)
      for (Vertex c = 0; c < 2; ++c) CHECK_FALSE(is_homomorphism(k3, k2, std::vector<Vertex>{a, b, c}));

  auto p = petersen_graph();
  VertexMap id(p.order());
  for (Vertex v = 0; v < p.order(); ++v) id[v] = v;
  CHECK(is_homomorphism(p, p, id));
  CHECK_THROWS_AS(is_homomorphism(k3, k2, std::vector<Vertex>{0, 1}), ParameterError);
  CHECK_THROWS_AS(is_homomorphism(k3, k2, std::vector<Vertex>{0, 1, 5}), ParameterError);
}

TEST_CASE("direct product") {
  auto k2 = complete_graph(2);
  auto p = direct_product(k2, k2);
  CHECK(p.order() == 4);
  CHECK(p.size() == 2);
  // (0,0)~(1,1) and (0,1)~(1,0)
  CHECK(p.adjacent(0, 3));
  CHECK(p.adjacent(1, 2));
  CHECK(p.label(1) == "(0,1)");

  CHECK(direct_product(complete_graph(3), complete_graph(3)).size() == 18);
}

TEST_CASE("direct product properties on random pairs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = testing::random_graph(2 + rng() % 5, 0.5, rng);
    auto g = testing::random_graph(2 + rng() % 5, 0.5, rng);
    auto fg = direct_product(f, g);
    CHECK(fg.size() == 2 * f.size() * g.size());

    VertexMap pf(fg.order()), pg(fg.order());
    for (Vertex a = 0; a < f.order(); ++a)
      for (Vertex b = 0; b < g.order(); ++b) {
        pf[a * g.order() + b] = a;
        pg[a * g.order() + b] = b;
      }
    CHECK(is_homomorphism(fg, f, pf));
    CHECK(is_homomorphism(fg, g, pg));

    // Brute-force adjacency by definition.
    for (Vertex x = 0; x < fg.order(); ++x)
      for (Vertex y = 0; y < fg.order(); ++y)
        CHECK(fg.adjacent(x, y) == (f.adjacent(pf[x], pf[y]) && g.adjacent(pg[x], pg[y])));
  }
}

TEST_CASE("proper coloring is a homomorphism into K_m") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_graph(1 + rng() % 7, 0.4, rng);
    const std::uint32_t m = 1 + rng() % 4;
    Coloring c(g.order());
    for (auto& x : c) x = rng() % m;
    VertexMap map(c.begin(), c.end());
    CHECK(is_proper_coloring(g, c) == is_homomorphism(g, complete_graph(m), map));
  }
}

TEST_CASE("adjacency is symmetric and irreflexive") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = testing::random_graph(1 + rng() % 12, 0.3, rng);
    for (Vertex u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (Vertex v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    GraphOracle oracle(g);
    for (int q = 0; q < 50; ++q) {
      VertexCode u{static_cast<int>(rng() % (g.order() + 2)) - 1};
      VertexCode v{static_cast<int>(rng() % (g.order() + 2)) - 1};
      CHECK(oracle.adjacent(u, v) == oracle.adjacent(v, u));
      if (oracle.adjacent(u, v)) CHECK((oracle.is_vertex(u) && oracle.is_vertex(v)));
      CHECK_FALSE(oracle.adjacent(u, u));
    }
  }
}

TEST_CASE("induced subgraph") {
  auto p = petersen_graph();
  std::vector<Vertex> keep{0, 7, 9};
  auto h = induced_subgraph(p, keep);
  CHECK(h.order() == 3);
  CHECK(h.label(0) == p.label(0));
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 0; b < 3; ++b) CHECK(h.adjacent(a, b) == p.adjacent(keep[a], keep[b]));
}

TEST_CASE("edge-list round trip") {
  auto p = petersen_graph();
  auto text = to_edge_list(p);
  CHECK(text.rfind("p 10 15\n", 0) == 0);
  std::istringstream in(text);
  auto q = read_edge_list(in);
  CHECK(q.order() == 10);
  CHECK(std::equal(p.edges().begin(), p.edges().end(), q.edges().begin(), q.edges().end()));
  CHECK(to_edge_list(q) == text);
}

TEST_CASE("edge-list reader accepts any order and comments") {
  std::istringstream in("c a comment\np 3 2\n\ne 2 1\ne 0 1\n");
  auto g = read_edge_list(in);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 2));
}

TEST_CASE("edge-list reader reports line numbers") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const FormatError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("p 3 1\ne 0 x\n") == 2);
  CHECK(line_of("e 0 1\n") == 1);
  CHECK(line_of("p 3 1\ne 0 3\n") == 2);
  CHECK(line_of("p 3 1\ne 1 1\n") == 2);
  CHECK(line_of("p 3 2\ne 0 1\n") != 0);
}

TEST_CASE("graph classes match the known counts") {
  const std::size_t counts[] = {1, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(graph_classes(n).size() == counts[n]);
  CHECK_THROWS_AS(graph_classes(8), ParameterError);
}

TEST_CASE("canonical edge code is a complete isomorphism invariant") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    auto g = testing::random_graph(n, 0.5, rng);
    auto h = testing::random_graph(n, 0.5, rng);
    CHECK((canonical_edge_code(g) == canonical_edge_code(h)) ==
          (testing::canonical_code(g) == testing::canonical_code(h)));

    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabeled;
    for (auto [u, v] : g.edges()) relabeled.emplace_back(perm[u], perm[v]);
    CHECK(canonical_edge_code(make_graph(n, relabeled)) == canonical_edge_code(g));
    CHECK(graph_from_edge_code(n, edge_code(g)).size() == g.size());
  }
}
