#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace frl {

/// One copy of a (possibly parallel) edge in canonical order: sorted by
/// (u, v, copy) with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  int copy = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertex-labelled undirected multigraph without tadpoles, stored as a
/// symmetric multiplicity matrix.
class Multigraph {
 public:
  /// Builds the graph from an n x n symmetric multiplicity matrix with a zero
  /// diagonal; throws InvalidArgument otherwise.
  explicit Multigraph(std::vector<std::vector<int>> multiplicity);

  /// Builds the graph from an edge list; repeated pairs add multiplicity.
  static Multigraph from_edges(int n_vertices,
                               const std::vector<std::pair<int, int>>& edges);

  /// Banana graph: two vertices joined by `lines` parallel edges.
  static Multigraph banana(int lines);
  static Multigraph complete(int n_vertices);
  /// Wheel with three spokes: rim 0,1,2 and hub 3.
  static Multigraph wheel3();

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return edge_count_; }
  int multiplicity(int i, int j) const { return m_[index(i, j)]; }
  int degree(int v) const;

  /// Upper triangle flattened row by row: (0,1), (0,2), ..., (1,2), ...
  std::vector<int> upper_triangle() const;
  /// Canonical edge list; edge k carries the polynomial variable a_{k+1}.
  std::vector<Edge> edges() const;

  int component_count() const;
  bool is_connected() const { return component_count() == 1; }

  /// Graph with vertex v relabelled to perm[v].
  Multigraph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }

 private:
  Multigraph(int n, std::vector<int> flat);
  std::size_t index(int i, int j) const;

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<int> m_;
};

/// Sorted, non-empty set of vertices of some graph.
class VertexSubset {
 public:
  VertexSubset(const Multigraph& parent, std::vector<int> members);

  const std::vector<int>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<int> members_;
};

/// Graph on the chosen vertices (relabelled 0..|s|-1 in order) carrying every
/// edge with both endpoints in the subset.
Multigraph induced_subgraph(const Multigraph& g, const VertexSubset& s);

/// First Betti number |E| - |V| + (number of components).
int loop_number(const Multigraph& g);

/// Product of l_ij! over unordered vertex pairs.
std::uint64_t symmetry_factor(const Multigraph& g);

/// All multiplicity matrices on n vertices with at most max_edges edges, in
/// lexicographic order of the flattened upper triangle.
std::vector<Multigraph> enumerate_graphs(int n, int max_edges,
                                         bool connected_only);

inline constexpr int kMaxPermutationVertices = 10;

/// Brute-force permutation search behind a degree-sequence prefilter. Throws
/// Capacity above kMaxPermutationVertices vertices.
bool are_isomorphic(const Multigraph& a, const Multigraph& b);

/// Lexicographically smallest upper triangle over all vertex permutations;
/// equal for isomorphic graphs.
std::vector<int> canonical_upper_triangle(const Multigraph& g);

/// Text form "n=<n>; e=<i>-<j>,..." in canonical edge order.
std::string to_dsl(const Multigraph& g);

}  // namespace frl
