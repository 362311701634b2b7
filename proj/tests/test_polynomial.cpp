#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frl/error.hpp"
#include "frl/graph_polynomial.hpp"
#include "frl/polynomial.hpp"
#include "test_support.hpp"

using namespace frl;
using frl::testing::fish;
using frl::testing::triangle;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto a1 = var(3, 0), a2 = var(3, 1), a3 = var(3, 2);
  SUBCASE("cancellation drops terms") {
    CHECK((a1 + a2 - a2) == a1);
    CHECK((a1 - a1).is_zero());
    CHECK((a1 * a2 - a2 * a1).is_zero());
  }
  SUBCASE("rendering is deterministic") {
    CHECK(to_string(a1 * a2 + a1 * a3 + a2 * a3) == "a1*a2 + a1*a3 + a2*a3");
    CHECK(to_string(-a1 - a2) == "-a1 - a2");
    Polynomial p = a1 * a1 * Polynomial::constant(3, 2) - Polynomial::constant(3, 5);
    CHECK(to_string(p) == "2*a1^2 - 5");
    CHECK(to_string(Polynomial(3)) == "0");
  }
  SUBCASE("degree and homogeneity") {
    CHECK((a1 * a2 + a3 * a3).degree() == 2);
    CHECK((a1 * a2 + a3 * a3).is_homogeneous());
    CHECK_FALSE((a1 * a2 + a3).is_homogeneous());
    CHECK(Polynomial(3).degree() == -1);
  }
  SUBCASE("exact division") {
    const Polynomial q = a1 + a2;
    const Polynomial p = q * (a1 * a3 - a2 + Polynomial::constant(3, 7));
    CHECK(p.divide_exact(q) == a1 * a3 - a2 + Polynomial::constant(3, 7));
    CHECK_THROWS_AS(void((a1 * a1 + a2).divide_exact(a1 + a3)), Error);
  }
  SUBCASE("evaluation") {
    const std::vector<double> x{2.0, 3.0, 5.0};
    CHECK((a1 * a2 + a1 * a3 + a2 * a3).evaluate(x) == doctest::Approx(31.0));
    CHECK(CompiledPolynomial(a1 * a2 * Polynomial::constant(3, 3) - a3)(x) == doctest::Approx(13.0));
  }
  SUBCASE("mismatched variable counts are rejected") {
    CHECK_THROWS_AS(void(var(2, 0) + var(3, 0)), Error);
    CHECK_THROWS_AS(void(var(2, 2)), Error);
  }
}

TEST_CASE("Bareiss and cofactor determinants agree") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 5;
    PolyMatrix m(n, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Polynomial p = Polynomial::constant(2, coef(rng));
        p += var(2, 0) * Polynomial::constant(2, coef(rng));
        if (trial % 2) p += var(2, 1) * Polynomial::constant(2, coef(rng));
        m(i, j) = p;
      }
    CHECK(determinant(m, DeterminantMethod::Bareiss) == determinant(m, DeterminantMethod::Cofactor));
  }
  SUBCASE("zero leading pivot needs a row swap") {
    PolyMatrix m(2, 1);
    m(0, 1) = var(1, 0);
    m(1, 0) = var(1, 0);
    CHECK(determinant(m, DeterminantMethod::Bareiss) == -(var(1, 0) * var(1, 0)));
    CHECK(determinant(m, DeterminantMethod::Cofactor) == -(var(1, 0) * var(1, 0)));
  }
}

TEST_CASE("Kirchhoff matrix") {
  SUBCASE("fish") {
    const auto L = kirchhoff_matrix(fish());
    const auto s = var(2, 0) + var(2, 1);
    CHECK(L(0, 0) == s);
    CHECK(L(1, 1) == s);
    CHECK(L(0, 1) == -s);
    CHECK(L(1, 0) == -s);
  }
  SUBCASE("single edge") {
    const auto L = kirchhoff_matrix(frl::testing::single_edge());
    CHECK(L(0, 0) == var(1, 0));
    CHECK(L(0, 1) == -var(1, 0));
  }
  SUBCASE("triangle diagonal under e1={0,1}, e2={0,2}, e3={1,2}") {
    const auto L = kirchhoff_matrix(triangle());
    CHECK(L(0, 0) == var(3, 0) + var(3, 1));
    CHECK(L(1, 1) == var(3, 0) + var(3, 2));
    CHECK(L(2, 2) == var(3, 1) + var(3, 2));
  }
  SUBCASE("row and column sums vanish") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = frl::testing::random_connected(rng, 6, 9);
      const auto L = kirchhoff_matrix(g);
      for (std::size_t i = 0; i < L.dimension(); ++i) {
        Polynomial row(L.num_vars()), col(L.num_vars());
        for (std::size_t j = 0; j < L.dimension(); ++j) {
          row += L(i, j);
          col += L(j, i);
        }
        CHECK(row.is_zero());
        CHECK(col.is_zero());
      }
    }
  }
}

TEST_CASE("dual graph polynomial from the Kirchhoff minor") {
  CHECK(to_string(dual_polynomial_minor(fish(), 0)) == "a1 + a2");
  CHECK(to_string(dual_polynomial_minor(triangle(), 0)) == "a1*a2 + a1*a3 + a2*a3");
  CHECK(to_string(dual_polynomial_minor(frl::testing::single_edge(), 1)) == "a1");
  CHECK_THROWS_AS(void(dual_polynomial_minor(fish(), 2)), Error);
  try {
    (void)dual_polynomial_minor(Multigraph::from_edges(3, {{0, 1}}), 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSpanningTree);
  }
}

TEST_CASE("dual graph polynomial from spanning trees") {
  CHECK(to_string(dual_polynomial_trees(fish())) == "a1 + a2");
  CHECK(to_string(dual_polynomial_trees(frl::testing::sunset())) == "a1 + a2 + a3");
  const auto w = dual_polynomial_trees(Multigraph::wheel3());
  CHECK(w.term_count() == 16);
  CHECK(w.degree() == 3);
  CHECK(w.is_homogeneous());
  for (const auto& [e, c] : w.terms()) CHECK(c == 1);
  CHECK(w == frl::testing::brute_force_tree_polynomial(Multigraph::wheel3()));
  CHECK_THROWS_AS(void(dual_polynomial_trees(Multigraph::from_edges(4, {{0, 1}, {2, 3}}))), Error);
}

TEST_CASE("tree-matrix theorem on random multigraphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = frl::testing::random_connected(rng, 6, 8);
    const auto trees = dual_polynomial_trees(g);
    CHECK(trees == frl::testing::brute_force_tree_polynomial(g));
    CHECK(trees.is_homogeneous());
    CHECK(trees.degree() == g.vertex_count() - 1);
    for (const auto& [e, c] : trees.terms()) CHECK(c == 1);
    CHECK(BigInt(trees.term_count()) == spanning_tree_count(g));
    for (int r = 0; r < g.vertex_count(); ++r) {
      CHECK(dual_polynomial_minor(g, r, DeterminantMethod::Cofactor) == trees);
      CHECK(dual_polynomial_minor(g, r, DeterminantMethod::Bareiss) == trees);
    }
  }
}

TEST_CASE("Bareiss route on graphs beyond the cofactor limit") {
  // Seven vertices: the minor is 6 x 6, so Auto dispatches to Bareiss.
  const auto g = Multigraph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 3}, {1, 5}});
  const auto auto_det = dual_polynomial_minor(g, 2);
  CHECK(auto_det == dual_polynomial_trees(g));
  CHECK(BigInt(auto_det.term_count()) == spanning_tree_count(g));
}
