#include "frl/residue.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "frl/error.hpp"
#include "frl/power_counting.hpp"

namespace frl {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

BigInt factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt double_factorial(int n) {
  BigInt r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

Rational pow_rational(const Rational& base, int exponent) {
  Rational r = 1;
  for (int k = 0; k < exponent; ++k) r *= base;
  return r;
}

}  // namespace

ResidueValue::ResidueValue(int i_power, Rational rational, int pi_power,
                           std::optional<Transcendental> transcendental)
    : i_power_(mod4(i_power)),
      rational_(std::move(rational)),
      pi_power_(pi_power),
      transcendental_(std::move(transcendental)) {
  if (rational_ < 0) {
    rational_ = -rational_;
    i_power_ = mod4(i_power_ + 2);
  }
  if (rational_ == 0) {
    i_power_ = 0;
    pi_power_ = 0;
  }
}

std::complex<double> ResidueValue::numeric() const {
  double magnitude = rational_.convert_to<double>() * std::pow(std::numbers::pi, pi_power_);
  if (transcendental_) magnitude *= transcendental_->value;
  switch (i_power_) {
    case 0: return {magnitude, 0.0};
    case 1: return {0.0, magnitude};
    case 2: return {-magnitude, 0.0};
    default: return {0.0, -magnitude};
  }
}

std::string ResidueValue::exact_text() const {
  if (rational_ == 0) return "0";
  std::ostringstream num, den;
  const BigInt p = numerator(rational_), q = denominator(rational_);
  bool has_num = false;
  auto add_num = [&](const std::string& s) {
    if (has_num) num << '*';
    num << s;
    has_num = true;
  };
  if (i_power_ == 1 || i_power_ == 3) add_num("i");
  if (p != 1) add_num(p.str());
  if (pi_power_ > 0) add_num(pi_power_ == 1 ? "pi" : "pi^" + std::to_string(pi_power_));
  if (transcendental_) add_num(transcendental_->tag);
  if (!has_num) num << '1';

  bool has_den = false;
  auto add_den = [&](const std::string& s) {
    if (has_den) den << '*';
    den << s;
    has_den = true;
  };
  if (q != 1) add_den(q.str());
  if (pi_power_ < 0) add_den(pi_power_ == -1 ? "pi" : "pi^" + std::to_string(-pi_power_));

  std::string out = (i_power_ >= 2 ? "-" : "") + num.str();
  if (has_den) {
    const bool compound = (q != 1) + (pi_power_ < 0) > 1;
    out += "/" + (compound ? "(" + den.str() + ")" : den.str());
  }
  return out;
}

ResidueValue operator*(const ResidueValue& a, const ResidueValue& b) {
  std::optional<Transcendental> t;
  if (a.transcendental_ && b.transcendental_)
    t = Transcendental{a.transcendental_->tag + "*" + b.transcendental_->tag,
                       a.transcendental_->value * b.transcendental_->value};
  else if (a.transcendental_)
    t = a.transcendental_;
  else
    t = b.transcendental_;
  return ResidueValue(a.i_power_ + b.i_power_, a.rational_ * b.rational_, a.pi_power_ + b.pi_power_,
                      std::move(t));
}

ResidueValue propagator_constant(int D) {
  require_supported_dimension(D);
  const int h = D / 2;
  Rational r(factorial(h - 2), BigInt(4));
  return ResidueValue((h - 1) % 2 == 0 ? 0 : 2, r, -h);
}

ResidueValue sphere_volume(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "sphere dimension must be >= 1");
  if (d % 2 == 0) return ResidueValue(0, Rational(BigInt(2), factorial(d / 2 - 1)), d / 2);
  // Gamma(d/2) = sqrt(pi) (d-2)!! / 2^((d-1)/2) for odd d.
  const int half = (d - 1) / 2;
  BigInt two_pow = 1;
  for (int k = 0; k < half; ++k) two_pow *= 2;
  return ResidueValue(0, Rational(2 * two_pow, double_factorial(d - 2)), half);
}

namespace {

ResidueValue prop48_prefactor(const Multigraph& g, int D) {
  if (!power_count(g, D).eg_primitive)
    throw Error(ErrorKind::NotPrimitive,
                "graph " + to_dsl(g) + " is not EG-primitive at D=" + std::to_string(D));
  const int e = g.edge_count();
  return ResidueValue(mod4((2 * D - 1) * (g.vertex_count() - 1)), pow_rational(Rational(1, 4), e) * 2, -e);
}

}  // namespace

ResidueValue residue_from_period(const Multigraph& g, int D, double period, const std::string& tag) {
  const ResidueValue base = prop48_prefactor(g, D);
  return ResidueValue(base.i_power(), base.rational(), base.pi_power(), Transcendental{tag, period});
}

ResidueValue residue_from_period(const Multigraph& g, int D, const Rational& period) {
  const ResidueValue base = prop48_prefactor(g, D);
  return ResidueValue(base.i_power(), base.rational() * period, base.pi_power());
}

int banana_box_power(int lines, int D) { return (D / 2 - 1) * lines - D / 2; }

DiffOpResidue banana_residue(int lines, int D) {
  require_supported_dimension(D);
  if (lines < 2) throw Error(ErrorKind::InvalidArgument, "banana needs at least two lines");
  const int l = banana_box_power(lines, D);
  if (l < 0)
    throw Error(ErrorKind::NotPrimitive, "banana with " + std::to_string(lines) +
                                             " lines is superficially convergent at D=" + std::to_string(D));
  ResidueValue k = propagator_constant(D);
  ResidueValue coefficient(0, 1, 0);
  for (int i = 0; i < lines; ++i) coefficient = coefficient * k;
  const int h = D / 2;
  BigInt four_pow = 1;
  for (int i = 0; i < l; ++i) four_pow *= 4;
  // Gamma(h) / (4^l l! Gamma(h + l)) with integer arguments.
  const Rational ratio(factorial(h - 1), four_pow * factorial(l) * factorial(h + l - 1));
  coefficient = coefficient * ResidueValue(D - 1, ratio, 0) * sphere_volume(D);
  return {coefficient, l};
}

}  // namespace frl
