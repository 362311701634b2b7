#pragma once

namespace frl {

/// Truncated power series with the first omitted term as error estimate.
struct SeriesValue {
  double value = 0.0;
  int terms = 0;
  double first_omitted = 0.0;
  /// |first_omitted| > 1e-12 |value|.
  bool truncation_warning = false;
};

inline constexpr double kSeriesRelativeTolerance = 1e-12;

/// f(z) = J1(sqrt z) / (8 pi^2 sqrt z) = (1/16 pi^2) sum_k (-z/4)^k / (k! (k+1)!),
/// summed over k < terms. Valid for any real z; f(0) = 1/(16 pi^2).
SeriesValue hadamard_f(double z, int terms = 60);

/// F(z) = -(1/4 pi) sum_k (psi(k+1) + psi(k+2)) (-z/4)^k / (k! (k+1)!), summed
/// over k < terms, with psi(1) = -C and psi(k+1) = psi(k) + 1/k.
SeriesValue hadamard_F(double z, int terms = 60);

}  // namespace frl
