#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "frl/graph.hpp"
#include "frl/polynomial.hpp"

namespace frl {

enum class QuadratureMethod { GaussTensor, MonteCarlo };

std::string_view to_string(QuadratureMethod m);
/// Accepts "gauss", "gauss-tensor", "mc", "monte-carlo".
QuadratureMethod parse_quadrature_method(std::string_view text);

struct QuadratureConfig {
  QuadratureMethod method = QuadratureMethod::GaussTensor;
  /// 0 selects the default for the number of free variables.
  int points_per_axis = 0;
  std::uint64_t samples = 10'000'000;
  std::uint64_t rng_seed = 0;
  int workers = 1;
  /// Gauss only: cluster nodes toward both ends of each axis with
  /// t = 3u^2 - 2u^3.
  bool endpoint_map = true;
  /// Monte Carlo only: Dirichlet shape of the sampling density. Empty picks
  /// half of sampling_shape_bound (capped at 1, the uniform density).
  std::optional<double> dirichlet_shape;

  /// Throws InvalidArgument on out-of-range fields.
  void validate() const;
};

/// Default Gauss points per axis: 64 up to 3 free variables, 24 for 4-5,
/// 12 for 6, 8 beyond.
int default_points_per_axis(int free_variables);

struct PeriodEstimate {
  double value = 0.0;
  /// Standard error for Monte Carlo; |I(p) - I(p/2)| for Gauss.
  double error = 0.0;
  QuadratureMethod method = QuadratureMethod::GaussTensor;
  std::uint64_t evaluations = 0;
  int points_per_axis = 0;      // Gauss
  double dirichlet_shape = 0.0; // Monte Carlo
};

/// Integrand of the period on the simplex: prod a_e^(D/2-2) / Psi(a)^(D/2).
class PeriodIntegrand {
 public:
  PeriodIntegrand(const Multigraph& g, int D);

  std::size_t edge_count() const noexcept { return edges_; }
  int dimension() const noexcept { return D_; }
  const Polynomial& dual_polynomial() const noexcept { return psi_exact_; }

  /// Unchecked hot-path evaluation; NaN/inf propagate.
  double raw(std::span<const double> alpha) const;
  /// Checks that alpha lies strictly inside the simplex and that the result
  /// is finite.
  double operator()(std::span<const double> alpha) const;

 private:
  std::size_t edges_;
  int D_;
  int numerator_power_;
  Polynomial psi_exact_;
  CompiledPolynomial psi_;
};

double period_integrand(const Multigraph& g, int D, std::span<const double> alpha);

/// Largest Dirichlet shape a for which the importance-sampling estimator of
/// the period has finite variance: the minimum over edge sets S whose removal
/// disconnects the graph into c(S) components of D - 2 - D (c(S) - 1) / |S|.
/// A non-positive value means the integral diverges along that face.
double sampling_shape_bound(const Multigraph& g, int D);

/// Numerical value of the Feynman period. Refuses graphs that fail
/// period_convergence_precheck with DivergentPeriod.
PeriodEstimate evaluate_period(const Multigraph& g, int D, const QuadratureConfig& cfg);

/// Integrand of the triangle period at D = 6 after integrating out a3 and
/// substituting a1 = lambda kappa, a2 = (1 - lambda) kappa, Jacobian kappa
/// included.
double triangle_reference_integrand(double lambda, double kappa);

struct ReferenceIntegral {
  double value = 0.0;
  double error = 0.0;  // |I(p) - I(p/2)|
  std::uint64_t evaluations = 0;
};

/// Tensor Gauss-Legendre evaluation of the reduced triangle integral on the
/// unit square with about `samples` nodes; the exact value is 1/2.
ReferenceIntegral triangle_reference_integral(std::uint64_t samples);

/// Gauss-Legendre nodes and weights on (0, 1).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre_unit(int points);

}  // namespace frl
