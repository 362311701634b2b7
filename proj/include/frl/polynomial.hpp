#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace frl {

using BigInt = boost::multiprecision::cpp_int;
using Exponents = std::vector<std::uint32_t>;

/// Multivariate polynomial over the integers in a fixed number of variables
/// a1..aN. Terms are kept in descending lexicographic order of their exponent
/// vectors; zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, BigInt, std::greater<Exponents>>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const BigInt& c);
  /// The single variable a_{index+1}.
  static Polynomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * x^exponents, dropping the term if it cancels.
  void add_term(const Exponents& exponents, const BigInt& c);

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Quotient of an exact division; throws InvalidArgument if `divisor` does
  /// not divide this polynomial.
  Polynomial divide_exact(const Polynomial& divisor) const;

  double evaluate(std::span<const double> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

/// Deterministic text form, e.g. "a1*a2 + a1*a3 - 2*a2^2".
std::string to_string(const Polynomial& p);

/// Floating-point copy of a polynomial for fast repeated evaluation.
class CompiledPolynomial {
 public:
  explicit CompiledPolynomial(const Polynomial& p);

  double operator()(std::span<const double> point) const;
  std::size_t num_vars() const noexcept { return num_vars_; }

 private:
  struct Term {
    double coefficient;
    std::uint32_t first;  // offset into factors_
    std::uint32_t count;
  };
  std::size_t num_vars_;
  std::vector<Term> terms_;
  std::vector<std::uint32_t> factors_;  // variable index repeated by exponent
};

/// Square matrix of polynomials sharing one variable ordering.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t dimension, std::size_t num_vars);

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  /// Matrix with row and column k removed.
  PolyMatrix minor(std::size_t k) const;

 private:
  std::size_t dim_;
  std::size_t num_vars_;
  std::vector<Polynomial> entries_;
};

enum class DeterminantMethod { Auto, Bareiss, Cofactor };

inline constexpr std::size_t kCofactorMaxDimension = 5;

/// Exact determinant. Auto uses cofactor expansion up to
/// kCofactorMaxDimension and fraction-free Bareiss elimination beyond.
Polynomial determinant(const PolyMatrix& m, DeterminantMethod method = DeterminantMethod::Auto);

}  // namespace frl
