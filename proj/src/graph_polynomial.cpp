#include "frl/graph_polynomial.hpp"

#include <numeric>

#include "frl/error.hpp"

namespace frl {

PolyMatrix kirchhoff_matrix(const Multigraph& g) {
  const auto edges = g.edges();
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  PolyMatrix m(n, edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Polynomial a = Polynomial::variable(edges.size(), k);
    const auto u = static_cast<std::size_t>(edges[k].u);
    const auto v = static_cast<std::size_t>(edges[k].v);
    m(u, u) += a;
    m(v, v) += a;
    m(u, v) -= a;
    m(v, u) -= a;
  }
  return m;
}

namespace {

void require_spanning_tree(const Multigraph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::NoSpanningTree, "no spanning tree: graph is disconnected");
}

struct LabelledEdge {
  int u;
  int v;
  std::size_t var;
};

bool connected(int n, const std::vector<LabelledEdge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

// Spanning-tree polynomial T(G) = T(G - e) + a_e T(G / e); contraction turns
// the other copies of e into loops, which are dropped.
Polynomial trees_recursive(int n, std::vector<LabelledEdge> edges, std::size_t num_vars) {
  if (n == 1) return Polynomial::constant(num_vars, 1);
  if (!connected(n, edges)) return Polynomial(num_vars);
  const LabelledEdge e = edges.back();
  edges.pop_back();

  Polynomial result = trees_recursive(n, edges, num_vars);

  // Merge e.v into e.u and renumber the last vertex into e.v's slot.
  const int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
  std::vector<LabelledEdge> contracted;
  contracted.reserve(edges.size());
  for (LabelledEdge f : edges) {
    for (int* end : {&f.u, &f.v}) {
      if (*end == gone) *end = keep;
      else if (*end == n - 1) *end = gone;
    }
    if (f.u != f.v) contracted.push_back(f);
  }
  result += Polynomial::variable(num_vars, e.var) * trees_recursive(n - 1, std::move(contracted), num_vars);
  return result;
}

}  // namespace

Polynomial dual_polynomial_minor(const Multigraph& g, int root_vertex, DeterminantMethod method) {
  if (root_vertex < 0 || root_vertex >= g.vertex_count())
    throw Error(ErrorKind::InvalidArgument, "root vertex out of range");
  require_spanning_tree(g);
  if (g.vertex_count() == 1) return Polynomial::constant(static_cast<std::size_t>(g.edge_count()), 1);
  return determinant(kirchhoff_matrix(g).minor(static_cast<std::size_t>(root_vertex)), method);
}

Polynomial dual_polynomial_trees(const Multigraph& g) {
  require_spanning_tree(g);
  const auto edges = g.edges();
  std::vector<LabelledEdge> labelled;
  labelled.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) labelled.push_back({edges[k].u, edges[k].v, k});
  return trees_recursive(g.vertex_count(), std::move(labelled), edges.size());
}

BigInt spanning_tree_count(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return 1;
  // Integer Bareiss on the (0,0) minor of the Laplacian.
  const int d = n - 1;
  std::vector<std::vector<BigInt>> a(d, std::vector<BigInt>(d));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) a[i - 1][j - 1] = i == j ? BigInt(g.degree(i)) : BigInt(-g.multiplicity(i, j));
  BigInt previous = 1;
  int sign = 1;
  for (int k = 0; k + 1 < d; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < d && a[r][k] == 0) ++r;
      if (r == d) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i)
      for (int j = k + 1; j < d; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    previous = a[k][k];
  }
  return sign * a[d - 1][d - 1];
}

}  // namespace frl
