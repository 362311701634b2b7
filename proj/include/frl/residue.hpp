#pragma once

#include <complex>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "frl/graph.hpp"

namespace frl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Named real factor that is only known numerically, such as a period.
struct Transcendental {
  std::string tag;
  double value = 1.0;

  friend bool operator==(const Transcendental&, const Transcendental&) = default;
};

/// Complex constant of the form i^i_power * rational * pi^pi_power * t.
/// The rational part is kept non-negative; signs live in i_power (mod 4).
class ResidueValue {
 public:
  ResidueValue() = default;
  ResidueValue(int i_power, Rational rational, int pi_power,
               std::optional<Transcendental> transcendental = std::nullopt);

  int i_power() const noexcept { return i_power_; }
  const Rational& rational() const noexcept { return rational_; }
  int pi_power() const noexcept { return pi_power_; }
  const std::optional<Transcendental>& transcendental() const noexcept { return transcendental_; }

  std::complex<double> numeric() const;
  /// Human-readable exact form, e.g. "-i/(8*pi^2)" or "i*P_Gamma/(2048*pi^6)".
  std::string exact_text() const;

  friend ResidueValue operator*(const ResidueValue& a, const ResidueValue& b);

  /// Equality of the structured fields (including any transcendental tag).
  friend bool operator==(const ResidueValue&, const ResidueValue&) = default;

 private:
  int i_power_ = 0;
  Rational rational_ = 1;
  int pi_power_ = 0;
  std::optional<Transcendental> transcendental_;
};

/// Residue of the form c * Box^box_power acting on the delta distribution.
struct DiffOpResidue {
  ResidueValue coefficient;
  int box_power = 0;

  friend bool operator==(const DiffOpResidue&, const DiffOpResidue&) = default;
};

/// Massless Feynman propagator constant (-1)^(D/2-1) Gamma(D/2-1) / (4 pi^(D/2)).
ResidueValue propagator_constant(int D);

/// Volume of the unit sphere S^(d-1) in R^d, 2 pi^(d/2) / Gamma(d/2).
ResidueValue sphere_volume(int d);

/// Residue constant c0 = 2 i^((2D-1)(|V|-1)) / (4 pi)^|E| * P of an
/// EG-primitive graph with period P. Throws NotPrimitive otherwise.
ResidueValue residue_from_period(const Multigraph& g, int D, double period,
                                 const std::string& tag = "P_Gamma");
/// Same, with the period known exactly and folded into the rational part.
ResidueValue residue_from_period(const Multigraph& g, int D, const Rational& period);

/// Box power l = (D/2 - 1) L - D/2 of the L-line banana.
int banana_box_power(int lines, int D);

/// Closed-form residue k_D^L i^(D-1) |S^(D-1)| Gamma(D/2) / (4^l l! Gamma(D/2+l))
/// Box^l of the banana with L lines. Throws NotPrimitive when l < 0.
DiffOpResidue banana_residue(int lines, int D);

}  // namespace frl
