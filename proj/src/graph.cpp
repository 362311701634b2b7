#include "frl/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "frl/error.hpp"

namespace frl {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Multigraph::Multigraph(std::vector<std::vector<int>> multiplicity) {
  n_ = static_cast<int>(multiplicity.size());
  if (n_ < 1) throw Error(ErrorKind::InvalidArgument, "graph needs at least one vertex");
  m_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(multiplicity[i].size()) != n_)
      throw Error(ErrorKind::InvalidArgument, "multiplicity matrix is not square");
    for (int j = 0; j < n_; ++j) {
      const int l = multiplicity[i][j];
      if (l < 0) throw Error(ErrorKind::InvalidArgument, "negative edge multiplicity");
      m_[index(i, j)] = l;
    }
  }
  for (int i = 0; i < n_; ++i) {
    if (m_[index(i, i)] != 0) throw Error(ErrorKind::InvalidArgument, "tadpoles unsupported");
    for (int j = i + 1; j < n_; ++j) {
      if (m_[index(i, j)] != m_[index(j, i)])
        throw Error(ErrorKind::InvalidArgument, "multiplicity matrix is not symmetric");
      edge_count_ += m_[index(i, j)];
    }
  }
}

Multigraph::Multigraph(int n, std::vector<int> flat) : n_(n), m_(std::move(flat)) {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) edge_count_ += m_[index(i, j)];
}

std::size_t Multigraph::index(int i, int j) const {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
}

Multigraph Multigraph::from_edges(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (n_vertices < 1) throw Error(ErrorKind::InvalidArgument, "graph needs at least one vertex");
  std::vector<std::vector<int>> m(n_vertices, std::vector<int>(n_vertices, 0));
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n_vertices || b >= n_vertices)
      throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (a == b) throw Error(ErrorKind::InvalidArgument, "tadpoles unsupported");
    ++m[a][b];
    ++m[b][a];
  }
  return Multigraph(std::move(m));
}

Multigraph Multigraph::banana(int lines) {
  if (lines < 0) throw Error(ErrorKind::InvalidArgument, "negative line count");
  return Multigraph({{0, lines}, {lines, 0}});
}

Multigraph Multigraph::complete(int n_vertices) {
  std::vector<std::vector<int>> m(n_vertices, std::vector<int>(n_vertices, 1));
  for (int i = 0; i < n_vertices; ++i) m[i][i] = 0;
  return Multigraph(std::move(m));
}

Multigraph Multigraph::wheel3() {
  return from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (int j = 0; j < n_; ++j) d += m_[index(v, j)];
  return d;
}

std::vector<int> Multigraph::upper_triangle() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) out.push_back(m_[index(i, j)]);
  return out;
}

std::vector<Edge> Multigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int c = 0; c < m_[index(i, j)]; ++c) out.push_back({i, j, c});
  return out;
}

int Multigraph::component_count() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  int components = n_;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      if (m_[index(i, j)] == 0) continue;
      const int ri = find_root(parent, i);
      const int rj = find_root(parent, j);
      if (ri != rj) {
        parent[ri] = rj;
        --components;
      }
    }
  return components;
}

Multigraph Multigraph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw Error(ErrorKind::InvalidArgument, "permutation size does not match vertex count");
  std::vector<int> flat(m_.size(), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) flat[index(perm[i], perm[j])] = m_[index(i, j)];
  return Multigraph(n_, std::move(flat));
}

VertexSubset::VertexSubset(const Multigraph& parent, std::vector<int> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorKind::InvalidArgument, "vertex subset is empty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.front() < 0 || members_.back() >= parent.vertex_count())
    throw Error(ErrorKind::InvalidArgument, "vertex subset member out of range");
}

Multigraph induced_subgraph(const Multigraph& g, const VertexSubset& s) {
  const auto& vs = s.members();
  const int k = static_cast<int>(vs.size());
  if (vs.back() >= g.vertex_count())
    throw Error(ErrorKind::InvalidArgument, "vertex subset does not belong to this graph");
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b) m[a][b] = g.multiplicity(vs[a], vs[b]);
  return Multigraph(std::move(m));
}

int loop_number(const Multigraph& g) {
  return g.edge_count() - g.vertex_count() + g.component_count();
}

std::uint64_t symmetry_factor(const Multigraph& g) {
  std::uint64_t result = 1;
  for (int l : g.upper_triangle())
    for (int k = 2; k <= l; ++k) {
      if (result > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k))
        throw Error(ErrorKind::Capacity, "symmetry factor overflows 64 bits");
      result *= static_cast<std::uint64_t>(k);
    }
  return result;
}

std::vector<Multigraph> enumerate_graphs(int n, int max_edges, bool connected_only) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "enumerate_graphs needs n >= 1");
  if (max_edges < 0) throw Error(ErrorKind::InvalidArgument, "enumerate_graphs needs max_edges >= 0");
  const int pairs = n * (n - 1) / 2;
  std::vector<int> upper(pairs, 0);
  std::vector<Multigraph> out;

  auto emit = [&] {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k) m[i][j] = m[j][i] = upper[k];
    Multigraph g(std::move(m));
    if (!connected_only || g.is_connected()) out.push_back(std::move(g));
  };

  // Odometer over the upper triangle; the last position varies fastest, which
  // yields lexicographic order.
  auto recurse = [&](auto&& self, int pos, int budget) -> void {
    if (pos == pairs) {
      emit();
      return;
    }
    for (int l = 0; l <= budget; ++l) {
      upper[pos] = l;
      self(self, pos + 1, budget - l);
    }
    upper[pos] = 0;
  };
  recurse(recurse, 0, max_edges);
  return out;
}

namespace {

void check_capacity(const Multigraph& g) {
  if (g.vertex_count() > kMaxPermutationVertices)
    throw Error(ErrorKind::Capacity, "permutation search is capped at " +
                                         std::to_string(kMaxPermutationVertices) + " vertices");
}

}  // namespace

bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  check_capacity(a);
  const int n = a.vertex_count();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::vector<int> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  // perm maps vertices of a to vertices of b; extend it one vertex at a time.
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || db[w] != da[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.multiplicity(u, v) == b.multiplicity(perm[u], w);
      if (!ok) continue;
      perm[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

std::vector<int> canonical_upper_triangle(const Multigraph& g) {
  check_capacity(g);
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = g.upper_triangle();
  std::vector<int> candidate(best.size());
  do {
    // perm[k] is the original vertex placed at position k.
    std::size_t idx = 0;
    bool smaller = false, larger = false;
    for (int i = 0; i < n && !larger; ++i)
      for (int j = i + 1; j < n; ++j, ++idx) {
        candidate[idx] = g.multiplicity(perm[i], perm[j]);
        if (!smaller) {
          if (candidate[idx] < best[idx]) smaller = true;
          else if (candidate[idx] > best[idx]) { larger = true; break; }
        }
      }
    if (smaller) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string to_dsl(const Multigraph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << "; e=";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ',';
    os << e.u << '-' << e.v;
    first = false;
  }
  return os.str();
}

}  // namespace frl
