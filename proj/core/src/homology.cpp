#include "trigrid/homology.hpp"

namespace trigrid {

linalg::IntMatrix coboundary_matrix(const ColoredCubicGraph& g) {
  linalg::IntMatrix d(g.edge_count(), g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    d(e, g.edge(e).tail) -= 1;
    d(e, g.edge(e).head) += 1;
  }
  return d;
}

SpanningTree spanning_tree(const ColoredCubicGraph& g) {
  SpanningTree t;
  t.in_tree.assign(g.edge_count(), false);
  t.parent_edge.assign(g.vertex_count(), g.edge_count());
  std::vector<bool> reached(g.vertex_count(), false);
  reached[0] = true;
  std::vector<VertexId> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const VertexId v = queue[qi];
    for (Color c : kColors) {
      const VertexId w = g.neighbor(v, c);
      if (reached[w]) continue;
      reached[w] = true;
      t.in_tree[g.edge_at(v, c)] = true;
      t.parent_edge[w] = g.edge_at(v, c);
      queue.push_back(w);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!t.in_tree[e]) t.cotree_edges.push_back(e);
  return t;
}

std::vector<IntVector> cycle_space_basis(const ColoredCubicGraph& g) {
  const SpanningTree t = spanning_tree(g);
  // Signed tree path from the root to v, as edge coefficients for walking
  // root -> v.
  auto root_path = [&](VertexId v) {
    IntVector path(g.edge_count(), Integer(0));
    while (t.parent_edge[v] != g.edge_count()) {
      const Edge& e = g.edge(t.parent_edge[v]);
      const VertexId up = e.tail == v ? e.head : e.tail;
      path[t.parent_edge[v]] += (e.head == v) ? 1 : -1;
      v = up;
    }
    return path;
  };
  std::vector<IntVector> basis;
  for (EdgeId f : t.cotree_edges) {
    // tail -> head along f, then back head -> root -> tail along the tree.
    IntVector cycle(g.edge_count(), Integer(0));
    cycle[f] = 1;
    const IntVector to_head = root_path(g.edge(f).head), to_tail = root_path(g.edge(f).tail);
    for (EdgeId e = 0; e < g.edge_count(); ++e) cycle[e] += to_tail[e] - to_head[e];
    basis.push_back(std::move(cycle));
  }
  return basis;
}

RatVector AffineChart::point(const RatVector& t) const {
  RatVector p = origin;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (t[k] == 0) continue;
    for (std::size_t i = 0; i < ambient_dim; ++i)
      if (basis[k][i] != 0) p[i] += t[k] * basis[k][i];
  }
  return p;
}

AffineResult solve_affine(const linalg::IntMatrix& coeffs, const RatVector& rhs) {
  auto solved = linalg::solve_affine(linalg::to_rational(coeffs), rhs);
  if (auto* bad = std::get_if<linalg::InconsistentRows>(&solved)) return *bad;
  const auto& sol = std::get<linalg::AffineSolution>(solved);
  AffineChart chart;
  chart.ambient_dim = coeffs.cols();
  chart.origin = sol.origin;
  chart.basis = linalg::integer_kernel(coeffs);
  return chart;
}

std::vector<IntVector> lattice_basis(const std::vector<IntVector>& vectors, std::size_t dim) {
  return linalg::hermite_basis(vectors, dim);
}

}  // namespace trigrid
