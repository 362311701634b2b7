#include "frl/polynomial.hpp"

#include <sstream>
#include <utility>

#include "frl/error.hpp"

namespace frl {

Polynomial Polynomial::constant(std::size_t num_vars, const BigInt& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  Polynomial p(num_vars);
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponents& exponents, const BigInt& c) {
  if (exponents.size() != num_vars_)
    throw Error(ErrorKind::InvalidArgument, "exponent vector length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    best = std::max(best, d);
  }
  return best;
}

bool Polynomial::is_homogeneous() const {
  const int d = degree();
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    if (s != d) return false;
  }
  return true;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_)
    throw Error(ErrorKind::InvalidArgument, "polynomials have different variable counts");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.num_vars_);
  Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const auto& [lead_e, lead_c] = *divisor.terms_.begin();
  Polynomial quotient(num_vars_);
  Polynomial rest = *this;
  Exponents e(num_vars_);
  while (!rest.is_zero()) {
    const auto& [re, rc] = *rest.terms_.begin();
    for (std::size_t k = 0; k < num_vars_; ++k) {
      if (re[k] < lead_e[k]) throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
      e[k] = re[k] - lead_e[k];
    }
    if (rc % lead_c != 0) throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
    Polynomial step(num_vars_);
    step.add_term(e, rc / lead_c);
    rest -= step * divisor;
    quotient += step;
  }
  return quotient;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != num_vars_)
    throw Error(ErrorKind::InvalidArgument, "evaluation point has wrong dimension");
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.convert_to<double>();
    for (std::size_t k = 0; k < num_vars_; ++k)
      for (std::uint32_t p = 0; p < e[k]; ++p) term *= point[k];
    total += term;
  }
  return total;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;

    std::ostringstream mono;
    bool any = false;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (any) mono << '*';
      mono << 'a' << (k + 1);
      if (e[k] > 1) mono << '^' << e[k];
      any = true;
    }
    if (!any) {
      os << magnitude;
    } else {
      if (magnitude != 1) os << magnitude << '*';
      os << mono.str();
    }
  }
  return os.str();
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) : num_vars_(p.num_vars()) {
  for (const auto& [e, c] : p.terms()) {
    Term t{c.convert_to<double>(), static_cast<std::uint32_t>(factors_.size()), 0};
    for (std::size_t k = 0; k < e.size(); ++k)
      for (std::uint32_t r = 0; r < e[k]; ++r) factors_.push_back(static_cast<std::uint32_t>(k));
    t.count = static_cast<std::uint32_t>(factors_.size()) - t.first;
    terms_.push_back(t);
  }
}

double CompiledPolynomial::operator()(std::span<const double> point) const {
  double total = 0.0;
  for (const Term& t : terms_) {
    double v = t.coefficient;
    for (std::uint32_t k = 0; k < t.count; ++k) v *= point[factors_[t.first + k]];
    total += v;
  }
  return total;
}

PolyMatrix::PolyMatrix(std::size_t dimension, std::size_t num_vars)
    : dim_(dimension), num_vars_(num_vars), entries_(dimension * dimension, Polynomial(num_vars)) {}

PolyMatrix PolyMatrix::minor(std::size_t k) const {
  if (k >= dim_) throw Error(ErrorKind::InvalidArgument, "minor index out of range");
  PolyMatrix out(dim_ - 1, num_vars_);
  for (std::size_t i = 0, oi = 0; i < dim_; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, oj = 0; j < dim_; ++j) {
      if (j == k) continue;
      out(oi, oj) = (*this)(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

namespace {

Polynomial cofactor_determinant(const PolyMatrix& m, std::vector<std::size_t>& cols,
                                std::size_t row) {
  const std::size_t n = m.dimension();
  if (row == n) return Polynomial::constant(m.num_vars(), 1);
  Polynomial total(m.num_vars());
  // Expansion along `row` over the still-free columns; sign follows the
  // position of the column among the free ones.
  std::size_t position = 0;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t c = cols[idx];
    if (c == n) continue;
    const Polynomial& entry = m(row, c);
    if (!entry.is_zero()) {
      cols[idx] = n;
      Polynomial sub = entry * cofactor_determinant(m, cols, row + 1);
      cols[idx] = c;
      if (position % 2 == 0) total += sub;
      else total -= sub;
    }
    ++position;
  }
  return total;
}

Polynomial bareiss_determinant(PolyMatrix a) {
  const std::size_t n = a.dimension();
  if (n == 0) return Polynomial::constant(a.num_vars(), 1);
  Polynomial previous = Polynomial::constant(a.num_vars(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial(a.num_vars());
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = num.divide_exact(previous);
      }
    previous = a(k, k);
  }
  Polynomial det = a(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m, DeterminantMethod method) {
  if (method == DeterminantMethod::Auto)
    method = m.dimension() <= kCofactorMaxDimension ? DeterminantMethod::Cofactor
                                                    : DeterminantMethod::Bareiss;
  if (method == DeterminantMethod::Bareiss) return bareiss_determinant(m);
  std::vector<std::size_t> cols(m.dimension());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_determinant(m, cols, 0);
}

}  // namespace frl
