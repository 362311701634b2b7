#pragma once

#include <optional>

#include "frl/graph.hpp"

namespace frl {

struct PowerCountReport {
  int dimension = 0;
  int scaling_degree = 0;     // (D-2)|E|
  int divergence_degree = 0;  // scaling_degree - (|V|-1) D
  bool superficially_divergent = false;
  /// omega = 0 and every proper induced subgraph on >= 2 vertices has omega < 0.
  bool eg_primitive = false;
  /// Every proper induced subgraph on >= 2 vertices has omega < 0, with no
  /// condition on the graph itself.
  bool subdivergence_free = false;
  /// Proper subgraph of maximal omega; ties go to the smallest, then
  /// lexicographically first, vertex set. Empty when |V| < 3.
  std::optional<VertexSubset> worst_subgraph;
  int worst_subgraph_degree = 0;
};

/// Throws UnsupportedDimension unless D is even and >= 4.
void require_supported_dimension(int D);

int scaling_degree(const Multigraph& g, int D);
int divergence_degree(const Multigraph& g, int D);

PowerCountReport power_count(const Multigraph& g, int D);

/// |E| = (D/2) h1.
bool check_cond_primitive(const Multigraph& g, int D);

/// Sufficient condition under which the period integral is treated as
/// absolutely convergent: omega = 0 with superficially convergent proper
/// subgraphs.
bool period_convergence_precheck(const Multigraph& g, int D);

}  // namespace frl
