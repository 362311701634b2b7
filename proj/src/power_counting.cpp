#include "frl/power_counting.hpp"

#include <string>

#include "frl/error.hpp"

namespace frl {

void require_supported_dimension(int D) {
  if (D < 4 || D % 2 != 0)
    throw Error(ErrorKind::UnsupportedDimension,
                "unsupported dimension " + std::to_string(D) + ": need an even D >= 4");
}

int scaling_degree(const Multigraph& g, int D) { return (D - 2) * g.edge_count(); }

int divergence_degree(const Multigraph& g, int D) {
  return scaling_degree(g, D) - (g.vertex_count() - 1) * D;
}

namespace {

void require_connected(const Multigraph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::InvalidArgument, "power counting needs a connected graph");
}

}  // namespace

PowerCountReport power_count(const Multigraph& g, int D) {
  require_supported_dimension(D);
  require_connected(g);
  PowerCountReport r;
  r.dimension = D;
  r.scaling_degree = scaling_degree(g, D);
  r.divergence_degree = divergence_degree(g, D);
  r.superficially_divergent = r.divergence_degree >= 0;

  const int n = g.vertex_count();
  bool all_convergent = true;
  // Proper subsets with >= 2 members, visited by size then lexicographically
  // so the first maximum found is the tie-break winner.
  for (int size = 2; size < n; ++size) {
    std::vector<int> members(size);
    for (int k = 0; k < size; ++k) members[k] = k;
    while (true) {
      VertexSubset s(g, members);
      const int omega = divergence_degree(induced_subgraph(g, s), D);
      if (omega >= 0) all_convergent = false;
      if (!r.worst_subgraph || omega > r.worst_subgraph_degree) {
        r.worst_subgraph = s;
        r.worst_subgraph_degree = omega;
      }
      int k = size - 1;
      while (k >= 0 && members[k] == n - size + k) --k;
      if (k < 0) break;
      ++members[k];
      for (int j = k + 1; j < size; ++j) members[j] = members[j - 1] + 1;
    }
  }
  r.subdivergence_free = all_convergent;
  // A lone vertex carries no distribution and is never primitive.
  r.eg_primitive = n >= 2 && r.divergence_degree == 0 && all_convergent;
  return r;
}

bool check_cond_primitive(const Multigraph& g, int D) {
  require_supported_dimension(D);
  require_connected(g);
  return 2 * g.edge_count() == D * loop_number(g);
}

bool period_convergence_precheck(const Multigraph& g, int D) {
  return power_count(g, D).eg_primitive;
}

}  // namespace frl
