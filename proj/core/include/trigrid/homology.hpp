#pragma once

#include <variant>
#include <vector>

#include "trigrid/graph.hpp"
#include "trigrid/linalg.hpp"
#include "trigrid/rational.hpp"

namespace trigrid {

// Coboundary d0: C^0 -> C^1, rows are edges, columns vertices,
// (d0 X)(e) = X(head) - X(tail).
linalg::IntMatrix coboundary_matrix(const ColoredCubicGraph& g);

// BFS spanning tree rooted at vertex 0, neighbors visited in color order.
struct SpanningTree {
  std::vector<bool> in_tree;          // per edge
  std::vector<EdgeId> cotree_edges;   // increasing edge id
  std::vector<EdgeId> parent_edge;    // per vertex; root holds edge_count()
};

SpanningTree spanning_tree(const ColoredCubicGraph& g);

// Fundamental cycles of the non-tree edges, scalar edge coefficients in
// {-1, 0, 1}; b + 1 vectors spanning ker(d0^T) over Z.
std::vector<IntVector> cycle_space_basis(const ColoredCubicGraph& g);

// Affine subspace origin + span(basis). The basis is an integer Z-basis of
// span ∩ Z^ambient, so chart parameters are periodic modulo Z^dim.
struct AffineChart {
  std::size_t ambient_dim = 0;
  RatVector origin;
  std::vector<IntVector> basis;

  std::size_t dim() const { return basis.size(); }
  RatVector point(const RatVector& t) const;
};

using AffineResult = std::variant<AffineChart, linalg::InconsistentRows>;

// Exact solve of coeffs·x = rhs with periodic chart basis.
AffineResult solve_affine(const linalg::IntMatrix& coeffs, const RatVector& rhs);

// Hermite normal form basis of the lattice spanned by `vectors`.
std::vector<IntVector> lattice_basis(const std::vector<IntVector>& vectors, std::size_t dim);

}  // namespace trigrid
