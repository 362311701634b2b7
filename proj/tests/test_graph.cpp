#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "frl/error.hpp"
#include "frl/graph.hpp"
#include "test_support.hpp"

using namespace frl;
using frl::testing::fish;
using frl::testing::triangle;

TEST_CASE("multigraph construction rejects malformed matrices") {
  CHECK_THROWS_AS(Multigraph({{1, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(Multigraph({{0, 1}, {2, 0}}), Error);
  CHECK_THROWS_AS(Multigraph({{0, -1}, {-1, 0}}), Error);
  CHECK_THROWS_AS(Multigraph::from_edges(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Multigraph::from_edges(2, {{0, 2}}), Error);
}

TEST_CASE("canonical edge order sorts by endpoints then copy") {
  const auto edges = Multigraph::from_edges(3, {{1, 2}, {0, 1}, {1, 0}, {2, 0}}).edges();
  REQUIRE(edges.size() == 4);
  CHECK(edges[0] == Edge{0, 1, 0});
  CHECK(edges[1] == Edge{0, 1, 1});
  CHECK(edges[2] == Edge{0, 2, 0});
  CHECK(edges[3] == Edge{1, 2, 0});
}

TEST_CASE("induced subgraph") {
  SUBCASE("fish on one vertex has no edges") {
    const auto s = induced_subgraph(fish(), VertexSubset(fish(), {0}));
    CHECK(s.vertex_count() == 1);
    CHECK(s.edge_count() == 0);
  }
  SUBCASE("triangle on two vertices is one edge") {
    const auto s = induced_subgraph(triangle(), VertexSubset(triangle(), {0, 1}));
    CHECK(s.vertex_count() == 2);
    CHECK(s.edge_count() == 1);
  }
  SUBCASE("wheel rim is a triangle") {
    const auto w = Multigraph::wheel3();
    CHECK(induced_subgraph(w, VertexSubset(w, {0, 1, 2})) == triangle());
  }
  SUBCASE("empty or out-of-range subsets are rejected") {
    CHECK_THROWS_AS(VertexSubset(fish(), {}), Error);
    CHECK_THROWS_AS(VertexSubset(fish(), {2}), Error);
  }
}

TEST_CASE("loop number") {
  CHECK(loop_number(fish()) == 1);
  CHECK(loop_number(Multigraph::wheel3()) == 3);
  CHECK(loop_number(Multigraph::banana(4)) == 3);
  CHECK(loop_number(Multigraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})) == 0);
  // Two disjoint fish.
  CHECK(loop_number(Multigraph::from_edges(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}})) == 2);
}

TEST_CASE("symmetry factor") {
  CHECK(symmetry_factor(fish()) == 2);
  CHECK(symmetry_factor(frl::testing::sunset()) == 6);
  CHECK(symmetry_factor(triangle()) == 1);
  CHECK(symmetry_factor(Multigraph::from_edges(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}})) == 12);
}

TEST_CASE("enumeration matches a brute-force count") {
  SUBCASE("two vertices") {
    const auto gs = enumerate_graphs(2, 2, true);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == Multigraph::banana(1));
    CHECK(gs[1] == fish());
  }
  SUBCASE("a single vertex") {
    const auto gs = enumerate_graphs(1, 5, true);
    REQUIRE(gs.size() == 1);
    CHECK(gs[0].edge_count() == 0);
  }
  SUBCASE("three vertices, at most three edges") {
    // Independent count over upper-triangle tuples (l01, l02, l12).
    int expected = 0;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        for (int c = 0; a + b + c <= 3; ++c)
          if ((a > 0) + (b > 0) + (c > 0) >= 2) ++expected;
    CHECK(expected == 10);
    const auto gs = enumerate_graphs(3, 3, true);
    CHECK(gs.size() == static_cast<std::size_t>(expected));
    CHECK(enumerate_graphs(3, 3, false).size() == 20);  // C(6, 3)
    CHECK(std::is_sorted(gs.begin(), gs.end(), [](const Multigraph& x, const Multigraph& y) {
      return x.upper_triangle() < y.upper_triangle();
    }));
  }
  SUBCASE("invariants on every enumerated graph") {
    for (const auto& g : enumerate_graphs(4, 5, false)) {
      for (int i = 0; i < g.vertex_count(); ++i) {
        CHECK(g.multiplicity(i, i) == 0);
        for (int j = 0; j < g.vertex_count(); ++j) CHECK(g.multiplicity(i, j) == g.multiplicity(j, i));
      }
      CHECK(loop_number(g) >= 0);
      CHECK(static_cast<int>(g.edges().size()) == g.edge_count());
      std::uint64_t fact = 1;
      for (int k = 2; k <= g.edge_count(); ++k) fact *= static_cast<std::uint64_t>(k);
      CHECK(fact % symmetry_factor(g) == 0);
    }
  }
}

TEST_CASE("trees have loop number zero and subgraphs never gain edges") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto tree = frl::testing::random_connected(rng, 7, 0);
    CHECK(loop_number(tree) == 0);
    const auto g = frl::testing::random_connected(rng, 6, 9);
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng() % 2) members.push_back(v);
    if (members.empty()) members.push_back(0);
    CHECK(induced_subgraph(g, VertexSubset(g, members)).edge_count() <= g.edge_count());
  }
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(fish(), fish().relabeled({1, 0})));
  CHECK_FALSE(are_isomorphic(triangle(), frl::testing::sunset()));
  const auto path = Multigraph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(are_isomorphic(path, Multigraph::from_edges(3, {{1, 0}, {0, 2}})));
  CHECK_FALSE(are_isomorphic(path, triangle()));
  // Same degree sequence, different multiplicity structure.
  const auto a = Multigraph::from_edges(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {1, 2}, {0, 3}});
  const auto b = Multigraph::from_edges(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}});
  const auto c = Multigraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
  CHECK(are_isomorphic(a, b));
  CHECK_FALSE(are_isomorphic(a, c));
  CHECK_THROWS_AS(void(are_isomorphic(Multigraph::complete(11), Multigraph::complete(11))), Error);
}

TEST_CASE("isomorphism is an equivalence relation and matches canonical forms") {
  std::mt19937_64 rng(11);
  std::vector<Multigraph> sample;
  for (int k = 0; k < 12; ++k) {
    auto g = frl::testing::random_connected(rng, 4, 5);
    sample.push_back(g);
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    sample.push_back(g.relabeled(perm));
  }
  for (const auto& a : sample) {
    CHECK(are_isomorphic(a, a));
    for (const auto& b : sample) {
      const bool ab = are_isomorphic(a, b);
      CHECK(ab == are_isomorphic(b, a));
      CHECK(ab == (a.vertex_count() == b.vertex_count() &&
                   canonical_upper_triangle(a) == canonical_upper_triangle(b)));
      if (!ab) continue;
      for (const auto& c : sample)
        if (are_isomorphic(b, c)) CHECK(are_isomorphic(a, c));
    }
  }
}
