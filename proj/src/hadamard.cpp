#include "frl/hadamard.hpp"

#include <cmath>
#include <numbers>

#include "frl/error.hpp"

namespace frl {

namespace {

// Sums c(k) x^k / (k! (k+1)!) for k < terms and evaluates the k = terms term.
template <class Coefficient>
SeriesValue bessel_like_series(double x, int terms, double prefactor, Coefficient coefficient) {
  if (terms < 1) throw Error(ErrorKind::InvalidArgument, "series needs at least one term");
  SeriesValue out;
  double power_ratio = 1.0;  // x^k / (k! (k+1)!)
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    sum += coefficient(k) * power_ratio;
    power_ratio *= x / ((k + 1.0) * (k + 2.0));
  }
  out.value = prefactor * sum;
  out.terms = terms;
  out.first_omitted = prefactor * coefficient(terms) * power_ratio;
  out.truncation_warning = std::abs(out.first_omitted) > kSeriesRelativeTolerance * std::abs(out.value);
  return out;
}

}  // namespace

SeriesValue hadamard_f(double z, int terms) {
  const double prefactor = 1.0 / (16.0 * std::numbers::pi * std::numbers::pi);
  return bessel_like_series(-z / 4.0, terms, prefactor, [](int) { return 1.0; });
}

SeriesValue hadamard_F(double z, int terms) {
  const double prefactor = -1.0 / (4.0 * std::numbers::pi);
  // psi(k+1) + psi(k+2) = -2C + 2 H_k + 1/(k+1).
  return bessel_like_series(-z / 4.0, terms, prefactor, [](int k) {
    double harmonic = 0.0;
    for (int j = 1; j <= k; ++j) harmonic += 1.0 / j;
    return -2.0 * std::numbers::egamma + 2.0 * harmonic + 1.0 / (k + 1.0);
  });
}

}  // namespace frl
