#include "frl/period.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "frl/error.hpp"
#include "frl/graph_polynomial.hpp"
#include "frl/power_counting.hpp"

namespace frl {

std::string_view to_string(QuadratureMethod m) {
  return m == QuadratureMethod::GaussTensor ? "gauss-tensor" : "monte-carlo";
}

QuadratureMethod parse_quadrature_method(std::string_view text) {
  if (text == "gauss" || text == "gauss-tensor") return QuadratureMethod::GaussTensor;
  if (text == "mc" || text == "monte-carlo") return QuadratureMethod::MonteCarlo;
  throw Error(ErrorKind::InvalidArgument, "unknown quadrature method '" + std::string(text) + "'");
}

void QuadratureConfig::validate() const {
  if (points_per_axis != 0 && points_per_axis < 2)
    throw Error(ErrorKind::InvalidArgument, "points_per_axis must be >= 2");
  if (samples < 1000) throw Error(ErrorKind::InvalidArgument, "samples must be >= 1000");
  if (workers < 1) throw Error(ErrorKind::InvalidArgument, "workers must be >= 1");
  if (dirichlet_shape && !(*dirichlet_shape > 0.0 && std::isfinite(*dirichlet_shape)))
    throw Error(ErrorKind::InvalidArgument, "dirichlet shape must be positive");
}

int default_points_per_axis(int free_variables) {
  if (free_variables <= 3) return 64;
  if (free_variables <= 5) return 24;
  if (free_variables == 6) return 12;
  return 8;
}

PeriodIntegrand::PeriodIntegrand(const Multigraph& g, int D)
    : edges_(static_cast<std::size_t>(g.edge_count())),
      D_(D),
      numerator_power_(D / 2 - 2),
      psi_exact_(dual_polynomial_trees(g)),
      psi_(psi_exact_) {}

double PeriodIntegrand::raw(std::span<const double> alpha) const {
  double numerator = 1.0;
  if (numerator_power_ > 0)
    for (double a : alpha) numerator *= std::pow(a, numerator_power_);
  const double psi = psi_(alpha);
  return numerator / std::pow(psi, D_ / 2);
}

namespace {

std::string format_point(std::span<const double> alpha) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t k = 0; k < alpha.size(); ++k) os << (k ? ", " : "") << alpha[k];
  os << ')';
  return os.str();
}

}  // namespace

double PeriodIntegrand::operator()(std::span<const double> alpha) const {
  if (alpha.size() != edges_) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  double sum = 0.0;
  for (double a : alpha) {
    if (!(a > 0.0)) throw Error(ErrorKind::InvalidArgument, "point is not strictly inside the simplex");
    sum += a;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw Error(ErrorKind::InvalidArgument, "point does not lie on the simplex");
  if (psi_(alpha) == 0.0)
    throw Error(ErrorKind::NumericalFailure, "dual polynomial vanishes at " + format_point(alpha));
  const double f = raw(alpha);
  if (!std::isfinite(f))
    throw Error(ErrorKind::NumericalFailure, "non-finite integrand at " + format_point(alpha));
  return f;
}

double period_integrand(const Multigraph& g, int D, std::span<const double> alpha) {
  require_supported_dimension(D);
  return PeriodIntegrand(g, D)(alpha);
}

double sampling_shape_bound(const Multigraph& g, int D) {
  const auto edges = g.edges();
  const std::size_t k = edges.size();
  if (k > 24) throw Error(ErrorKind::Capacity, "face analysis is capped at 24 edges");
  const int n = g.vertex_count();
  double bound = static_cast<double>(D - 2);
  std::vector<int> parent(n);
  const std::uint32_t full = (1u << k) - 1u;
  for (std::uint32_t removed = 1; removed < full; ++removed) {
    for (int v = 0; v < n; ++v) parent[v] = v;
    int components = n;
    for (std::size_t e = 0; e < k; ++e) {
      if (removed & (1u << e)) continue;
      int a = edges[e].u, b = edges[e].v;
      while (parent[a] != a) a = parent[a];
      while (parent[b] != b) b = parent[b];
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    const int deficit = components - 1;
    if (deficit == 0) continue;
    const int size = std::popcount(removed);
    bound = std::min(bound, static_cast<double>(D - 2) - static_cast<double>(D * deficit) / size);
  }
  return bound;
}

GaussRule gauss_legendre_unit(int points) {
  if (points < 1) throw Error(ErrorKind::InvalidArgument, "Gauss rule needs at least one point");
  GaussRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  const int n = points;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // x is in (-1, 1) descending; map to (0, 1) ascending.
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = rule.weights[n - 1 - i] = 0.5 * w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.5;
  return rule;
}

namespace {

void run_workers(int workers, const auto& body) {
  if (workers == 1) {
    body(0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::vector<std::exception_ptr> failures(workers);
  for (int w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
}

GaussRule mapped_rule(int points, bool endpoint_map) {
  GaussRule rule = gauss_legendre_unit(points);
  if (endpoint_map)
    for (int i = 0; i < points; ++i) {
      const double u = rule.nodes[i];
      rule.nodes[i] = u * u * (3.0 - 2.0 * u);
      rule.weights[i] *= 6.0 * u * (1.0 - u);
    }
  return rule;
}

// Tensor rule over the stick-breaking cube: a_i = t_i prod_{j<i} (1 - t_j),
// last a = prod_j (1 - t_j), Jacobian prod_i prod_{j<i} (1 - t_j).
double gauss_tensor(const PeriodIntegrand& f, int points, bool endpoint_map, int workers) {
  const GaussRule rule = mapped_rule(points, endpoint_map);
  const std::size_t k = f.edge_count();
  const std::size_t m = k - 1;
  std::vector<double> partial(workers, 0.0);

  run_workers(workers, [&](int w) {
    const int begin = points * w / workers;
    const int end = points * (w + 1) / workers;
    if (begin == end) return;
    std::vector<int> idx(m, 0);
    std::vector<double> alpha(k);
    idx[0] = begin;
    double sum = 0.0;
    while (idx[0] < end) {
      double rem = 1.0, jac = 1.0, weight = 1.0;
      for (std::size_t i = 0; i < m; ++i) {
        const double t = rule.nodes[idx[i]];
        weight *= rule.weights[idx[i]];
        jac *= rem;
        alpha[i] = t * rem;
        rem *= 1.0 - t;
      }
      alpha[m] = rem;
      const double value = f.raw(alpha);
      if (!std::isfinite(value))
        throw Error(ErrorKind::NumericalFailure, "non-finite integrand at " + format_point(alpha));
      sum += weight * jac * value;
      std::size_t axis = m;
      while (axis-- > 0) {
        if (++idx[axis] < points || axis == 0) break;
        idx[axis] = 0;
      }
    }
    partial[w] = sum;
  });
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    const double n = static_cast<double>(count), no = static_cast<double>(o.count);
    const double delta = o.mean - mean;
    const double total = n + no;
    mean += delta * no / total;
    m2 += o.m2 + delta * delta * n * no / total;
    count += o.count;
  }
};

PeriodEstimate monte_carlo(const PeriodIntegrand& f, const QuadratureConfig& cfg, double shape) {
  const std::size_t k = f.edge_count();
  const double kd = static_cast<double>(k);
  const double log_norm = std::lgamma(kd * shape) - kd * std::lgamma(shape);
  const int workers = cfg.workers;
  std::vector<Moments> moments(workers);

  run_workers(workers, [&](int w) {
    const std::uint64_t begin = cfg.samples * static_cast<std::uint64_t>(w) / workers;
    const std::uint64_t end = cfg.samples * static_cast<std::uint64_t>(w + 1) / workers;
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.rng_seed), static_cast<std::uint32_t>(cfg.rng_seed >> 32),
                      static_cast<std::uint32_t>(w), 0x66726cu};
    std::mt19937_64 rng(seq);
    std::gamma_distribution<double> gamma(shape, 1.0);
    std::vector<double> alpha(k);
    Moments acc;
    for (std::uint64_t s = begin; s < end; ++s) {
      double total = 0.0;
      bool ok = false;
      while (!ok) {
        total = 0.0;
        for (double& a : alpha) total += (a = gamma(rng));
        ok = total > 0.0;
        if (ok) {
          for (double& a : alpha) {
            a /= total;
            if (a < 1e-300) ok = false;
          }
        }
      }
      double log_density = log_norm;
      if (shape != 1.0)
        for (double a : alpha) log_density += (shape - 1.0) * std::log(a);
      const double value = f.raw(alpha) * std::exp(-log_density);
      if (!std::isfinite(value))
        throw Error(ErrorKind::NumericalFailure, "non-finite integrand at " + format_point(alpha));
      acc.add(value);
    }
    moments[w] = acc;
  });

  Moments all;
  for (const auto& m : moments) all.merge(m);
  PeriodEstimate est;
  est.method = QuadratureMethod::MonteCarlo;
  est.value = all.mean;
  est.error = all.count > 1 ? std::sqrt(all.m2 / static_cast<double>(all.count - 1) / static_cast<double>(all.count))
                            : 0.0;
  est.evaluations = all.count;
  est.dirichlet_shape = shape;
  return est;
}

}  // namespace

PeriodEstimate evaluate_period(const Multigraph& g, int D, const QuadratureConfig& cfg) {
  cfg.validate();
  require_supported_dimension(D);
  if (!period_convergence_precheck(g, D))
    throw Error(ErrorKind::DivergentPeriod,
                "divergent period: graph " + to_dsl(g) + " is not EG-primitive at D=" + std::to_string(D));
  if (g.edge_count() < 2) throw Error(ErrorKind::InvalidArgument, "period needs at least two edges");

  const PeriodIntegrand f(g, D);
  if (cfg.method == QuadratureMethod::MonteCarlo) {
    double shape = 1.0;
    if (cfg.dirichlet_shape) {
      shape = *cfg.dirichlet_shape;
    } else {
      const double bound = sampling_shape_bound(g, D);
      if (bound <= 0.0)
        throw Error(ErrorKind::DivergentPeriod, "divergent period: integrand is not integrable near a boundary face");
      shape = std::min(1.0, 0.5 * bound);
    }
    return monte_carlo(f, cfg, shape);
  }

  const int free_vars = g.edge_count() - 1;
  const int p = cfg.points_per_axis ? cfg.points_per_axis : default_points_per_axis(free_vars);
  const int coarse = std::max(1, p / 2);
  PeriodEstimate est;
  est.method = QuadratureMethod::GaussTensor;
  est.points_per_axis = p;
  est.value = gauss_tensor(f, p, cfg.endpoint_map, cfg.workers);
  const double coarse_value = gauss_tensor(f, coarse, cfg.endpoint_map, cfg.workers);
  est.error = std::abs(est.value - coarse_value);
  est.evaluations = static_cast<std::uint64_t>(std::pow(static_cast<double>(p), free_vars) +
                                               std::pow(static_cast<double>(coarse), free_vars));
  return est;
}

double triangle_reference_integrand(double lambda, double kappa) {
  const double a1a2 = lambda * (1.0 - lambda) * kappa * kappa;
  const double denominator = a1a2 + kappa * (1.0 - kappa);
  return a1a2 * (1.0 - kappa) * kappa / (denominator * denominator * denominator);
}

ReferenceIntegral triangle_reference_integral(std::uint64_t samples) {
  if (samples < 1000) throw Error(ErrorKind::InvalidArgument, "samples must be >= 1000");
  const int p = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(samples))));
  auto integrate = [](int points) {
    const GaussRule rule = gauss_legendre_unit(points);
    double total = 0.0;
    for (int i = 0; i < points; ++i) {
      double row = 0.0;
      for (int j = 0; j < points; ++j)
        row += rule.weights[j] * triangle_reference_integrand(rule.nodes[i], rule.nodes[j]);
      total += rule.weights[i] * row;
    }
    return total;
  };
  ReferenceIntegral r;
  r.value = integrate(p);
  r.error = std::abs(r.value - integrate(p / 2));
  r.evaluations = static_cast<std::uint64_t>(p) * p + static_cast<std::uint64_t>(p / 2) * (p / 2);
  return r;
}

}  // namespace frl
