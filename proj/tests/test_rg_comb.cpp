#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "frl/error.hpp"
#include "frl/rg_comb.hpp"
#include "test_support.hpp"

using namespace frl;

namespace {

std::vector<std::string> rendered(const std::vector<VertexMonomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

VertexMonomial times(const VertexMonomial& a, const VertexMonomial& b) {
  auto f = a.factors();
  for (const auto& [label, n] : b.factors()) f[label] += n;
  return VertexMonomial(f);
}

std::uint64_t bell(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

}  // namespace

TEST_CASE("vertex monomial parsing") {
  const auto m = VertexMonomial::parse("phi^2*dphi");
  CHECK(m.degree() == 3);
  CHECK(m.factors().at("phi") == 2);
  CHECK(m.factors().at("dphi") == 1);
  CHECK(to_string(m) == "dphi*phi^2");
  CHECK(VertexMonomial::parse("1").is_unit());
  CHECK(VertexMonomial::parse("").is_unit());
  CHECK(to_string(VertexMonomial()) == "1");
  CHECK(VertexMonomial::parse("phi*phi") == VertexMonomial::parse("phi^2"));
  CHECK(VertexMonomial({{"phi", 0}}).is_unit());
  CHECK(VertexMonomial::parse(" phi ^ 2 * dphi ") == m);
  for (const char* bad : {"phi^", "^2", "phi^-1", "phi**dphi", "2phi"}) {
    CAPTURE(std::string(bad));
    CHECK_THROWS_AS(void(VertexMonomial::parse(bad)), Error);
  }
}

TEST_CASE("Wick submonomials") {
  CHECK(rendered(wick_submonomials(VertexMonomial::parse("phi^4"))) ==
        std::vector<std::string>{"1", "phi", "phi^2", "phi^3", "phi^4"});
  CHECK(rendered(wick_submonomials(VertexMonomial())) == std::vector<std::string>{"1"});
  const auto mixed = wick_submonomials(VertexMonomial::parse("phi^2*dphi"));
  CHECK(mixed.size() == 6);
  CHECK(std::set<VertexMonomial>(mixed.begin(), mixed.end()).size() == 6);
  CHECK(mixed.front().is_unit());
  CHECK(mixed.back() == VertexMonomial::parse("phi^2*dphi"));
}

TEST_CASE("coproduct") {
  SUBCASE("phi^4 gives binomial coefficients") {
    std::vector<std::uint64_t> coeffs;
    for (const auto& t : coproduct(VertexMonomial::parse("phi^4"))) coeffs.push_back(t.coefficient);
    CHECK(coeffs == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
  }
  SUBCASE("mixed labels multiply per label") {
    for (const auto& t : coproduct(VertexMonomial::parse("phi^2*dphi")))
      if (t.right == VertexMonomial::parse("phi*dphi")) {
        CHECK(t.coefficient == 2);
        CHECK(t.left == VertexMonomial::parse("phi"));
      }
  }
  SUBCASE("counit and cocommutativity") {
    for (const char* text : {"phi^4", "phi^2*dphi", "a*b*c^3", "1", "psi^5*phi"}) {
      const auto p = VertexMonomial::parse(text);
      const auto terms = coproduct(p);
      std::uint64_t total = 0;
      int unit_right = 0, unit_left = 0;
      for (const auto& t : terms) {
        total += t.coefficient;
        CHECK(times(t.left, t.right) == p);
        if (t.right.is_unit()) {
          ++unit_right;
          CHECK(t.coefficient == 1);
          CHECK(t.left == p);
        }
        if (t.left.is_unit()) ++unit_left;
        const auto mirror = std::find_if(terms.begin(), terms.end(), [&](const CoproductTerm& u) {
          return u.left == t.right && u.right == t.left;
        });
        REQUIRE(mirror != terms.end());
        CHECK(mirror->coefficient == t.coefficient);
      }
      CHECK(unit_right == 1);
      CHECK(unit_left == 1);
      CHECK(total == (std::uint64_t{1} << p.degree()));
    }
  }
}

TEST_CASE("set partitions") {
  for (int n = 1; n <= 8; ++n) CHECK(set_partitions(n).size() == bell(n));
  const auto p3 = set_partitions(3);
  CHECK(p3.front() == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(p3.back() == std::vector<std::vector<int>>{{0}, {1}, {2}});
  for (const auto& part : set_partitions(5)) {
    std::vector<int> seen;
    for (const auto& block : part) {
      CHECK(std::is_sorted(block.begin(), block.end()));
      seen.insert(seen.end(), block.begin(), block.end());
    }
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector<int>{0, 1, 2, 3, 4});
  }
}

TEST_CASE("beta expansion") {
  SUBCASE("fish") {
    const auto terms = beta_expansion(frl::testing::fish(), 4);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].quotient_graph.edge_count() == 0);
    REQUIRE(terms[0].block_graphs.size() == 1);
    CHECK(terms[0].block_graphs[0] == frl::testing::fish());
    CHECK(terms[0].leaf_status == std::vector<LeafStatus>{LeafStatus::PrimitiveWithResidue});
  }
  SUBCASE("triangle at D=6") {
    const auto terms = beta_expansion(frl::testing::triangle(), 6);
    CHECK(terms.size() == 4);
    for (const auto& t : terms) {
      if (t.partition.size() == 1) {
        CHECK(t.leaf_status == std::vector<LeafStatus>{LeafStatus::PrimitiveWithResidue});
      } else {
        CHECK(t.quotient_graph.edge_count() == 2);
        for (std::size_t b = 0; b < t.partition.size(); ++b)
          CHECK(t.leaf_status[b] == (t.partition[b].size() == 1 ? LeafStatus::Trivial : LeafStatus::RequiresExtension));
      }
    }
  }
  SUBCASE("edges are conserved") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const auto g = frl::testing::random_connected(rng, 6, 9);
      const auto terms = beta_expansion(g, 4);
      CHECK(terms.size() == bell(g.vertex_count()) - 1);
      for (const auto& t : terms) {
        int total = t.quotient_graph.edge_count();
        for (const auto& b : t.block_graphs) total += b.edge_count();
        CHECK(total == g.edge_count());
        CHECK(t.quotient_graph.vertex_count() == g.vertex_count());
        CHECK(t.block_graphs.size() == t.partition.size());
        CHECK(t.leaf_status.size() == t.partition.size());
      }
    }
  }
  SUBCASE("capacity") {
    CHECK_THROWS_AS(void(beta_expansion(Multigraph::complete(kMaxBetaVertices + 1), 4)), Error);
  }
}

TEST_CASE("primitive beta value") {
  QuadratureConfig cfg;
  const auto fish = primitive_beta_value(frl::testing::fish(), 4, cfg);
  CHECK(fish.i_power() == 3);
  CHECK(fish.rational() == Rational(1, 8));
  CHECK(fish.numeric().imag() == doctest::Approx(-1.0 / (8 * std::numbers::pi * std::numbers::pi)));
  try {
    (void)primitive_beta_value(Multigraph::banana(4), 4, cfg);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrimitive);
  }
}
