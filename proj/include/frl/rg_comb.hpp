#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "frl/graph.hpp"
#include "frl/period.hpp"
#include "frl/residue.hpp"

namespace frl {

/// Product of decorated field factors at one vertex, e.g. phi^2*dphi. An
/// empty factor map is the unit monomial.
class VertexMonomial {
 public:
  VertexMonomial() = default;
  explicit VertexMonomial(std::map<std::string, int> factors);

  /// Parses "label^power" factors joined by '*'; a bare label has power 1 and
  /// "1" is the unit monomial.
  static VertexMonomial parse(std::string_view text);

  const std::map<std::string, int>& factors() const noexcept { return factors_; }
  int degree() const;
  bool is_unit() const noexcept { return factors_.empty(); }

  friend bool operator==(const VertexMonomial&, const VertexMonomial&) = default;
  friend auto operator<=>(const VertexMonomial&, const VertexMonomial&) = default;

 private:
  std::map<std::string, int> factors_;
};

std::string to_string(const VertexMonomial& m);

struct CoproductTerm {
  std::uint64_t coefficient = 1;
  VertexMonomial left;   // p / q
  VertexMonomial right;  // q
};

/// Every divisor of p, including 1 and p, in lexicographic order of the
/// exponent tuple (labels in sorted order).
std::vector<VertexMonomial> wick_submonomials(const VertexMonomial& p);

/// One term per Wick submonomial q, with coefficient prod_label C(n, m).
std::vector<CoproductTerm> coproduct(const VertexMonomial& p);

enum class LeafStatus { Trivial, PrimitiveWithResidue, RequiresExtension };
std::string_view to_string(LeafStatus s);

struct BetaTerm {
  std::vector<std::vector<int>> partition;
  /// Same vertex set as the input, carrying only edges between blocks.
  Multigraph quotient_graph;
  /// Block-induced graphs, relabelled 0..|I|-1 in vertex order.
  std::vector<Multigraph> block_graphs;
  std::vector<LeafStatus> leaf_status;
};

inline constexpr int kMaxBetaVertices = 12;

/// Set partitions of {0..n-1} in restricted-growth-string order.
std::vector<std::vector<std::vector<int>>> set_partitions(int n);

/// Graph-partition skeleton of the renormalization-group generator: one term
/// per partition of V(g) other than the all-singletons partition.
std::vector<BetaTerm> beta_expansion(const Multigraph& g, int D);

/// Residue constant of an EG-primitive graph, i.e. its contribution kernel to
/// B. Throws NotPrimitive (requires extension) otherwise.
ResidueValue primitive_beta_value(const Multigraph& g, int D, const QuadratureConfig& cfg);

}  // namespace frl
