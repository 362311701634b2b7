#pragma once

#include "frl/graph.hpp"
#include "frl/polynomial.hpp"

namespace frl {

/// Generic graph Laplacian: L_ii = sum of a_e over edges at i, L_ij = -sum of
/// a_e over edges joining i and j. Edge k of g.edges() is variable a_{k+1}.
PolyMatrix kirchhoff_matrix(const Multigraph& g);

/// Dual graph polynomial as the determinant of the (root, root) minor of the
/// Kirchhoff matrix. Throws NoSpanningTree for disconnected graphs.
Polynomial dual_polynomial_minor(const Multigraph& g, int root_vertex,
                                 DeterminantMethod method = DeterminantMethod::Auto);

/// Dual graph polynomial as the sum over spanning trees of the product of the
/// tree's edge variables, by deletion-contraction. Parallel edges are distinct.
Polynomial dual_polynomial_trees(const Multigraph& g);

/// Number of spanning trees from the integer Laplacian minor (all a_e = 1).
BigInt spanning_tree_count(const Multigraph& g);

}  // namespace frl
