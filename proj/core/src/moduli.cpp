#include "trigrid/moduli.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "trigrid/error.hpp"

namespace trigrid {

bool WindingClass::is_zero() const {
  return std::all_of(rho.begin(), rho.end(), [](const Integer& z) { return z == 0; });
}

WindingClass zero_class(const ColoredCubicGraph& g) { return {IntVector(2 * g.edge_count(), Integer(0))}; }

linalg::IntMatrix slope_coboundary(const ColoredCubicGraph& g, const SlopeSystem& s, bool based) {
  const std::size_t shift = based ? 2 : 0;
  linalg::IntMatrix a(g.edge_count(), 2 * g.vertex_count() - shift);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const IntPair& n = s.normal(edge.color);
    for (std::size_t k = 0; k < 2; ++k) {
      if (!based || edge.head != 0) a(e, 2 * edge.head + k - shift) += n[k];
      if (!based || edge.tail != 0) a(e, 2 * edge.tail + k - shift) -= n[k];
    }
  }
  return a;
}

IntVector slope_pairing(const ColoredCubicGraph& g, const SlopeSystem& s, const WindingClass& rho) {
  IntVector m(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const IntPair& n = s.normal(g.edge(e).color);
    m[e] = rho.rho[2 * e] * Integer(static_cast<long>(n[0])) + rho.rho[2 * e + 1] * Integer(static_cast<long>(n[1]));
  }
  return m;
}

Rational WallFamily::value(const RatVector& t) const {
  Rational v = constant;
  for (std::size_t j = 0; j < gradient.size(); ++j)
    if (gradient[j] != 0) v += t[j] * gradient[j];
  return v;
}

namespace {

Integer as_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

// Vertex v's coordinate k in the based chart, or none for the pinned vertex.
std::optional<std::size_t> coordinate(VertexId v, std::size_t k) {
  if (v == 0) return std::nullopt;
  return 2 * (v - 1) + k;
}

struct Functional {
  IntVector gradient;
  Rational constant;
};

// <n, p_i - p_k> on the chart.
Functional pair_functional(const AffineChart& chart, const IntPair& n, VertexId i, VertexId k) {
  Functional f{IntVector(chart.dim(), Integer(0)), Rational(0)};
  auto accumulate = [&](VertexId v, int sign) {
    for (std::size_t c = 0; c < 2; ++c) {
      const auto idx = coordinate(v, c);
      if (!idx) continue;
      const Integer w = as_integer(n[c]) * sign;
      f.constant += chart.origin[*idx] * w;
      for (std::size_t j = 0; j < chart.dim(); ++j) f.gradient[j] += chart.basis[j][*idx] * w;
    }
  };
  accumulate(i, 1);
  accumulate(k, -1);
  return f;
}

bool all_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

bool joined_by_all_colors(const ColoredCubicGraph& g, VertexId i, VertexId k) {
  return std::all_of(kColors.begin(), kColors.end(), [&](Color c) { return g.joined(i, k, c); });
}

void build_walls(ModuliComponent& comp) {
  const ColoredCubicGraph& g = comp.graph;
  std::map<std::pair<IntVector, Rational>, std::size_t> index;
  for (Color c : kColors) {
    for (VertexId i = 0; i < g.vertex_count(); ++i) {
      for (VertexId k = i + 1; k < g.vertex_count(); ++k) {
        if (g.joined(i, k, c)) continue;
        Functional f = pair_functional(comp.chart, comp.slopes.normal(c), i, k);
        if (all_zero(f.gradient)) {
          if (is_integer(f.constant)) comp.degeneracies.push_back({c, i, k, f.constant, false});
          continue;
        }
        const auto lead = std::find_if(f.gradient.begin(), f.gradient.end(), [](const Integer& z) { return z != 0; });
        if (*lead < 0) {
          for (auto& z : f.gradient) z = -z;
          f.constant = -f.constant;
        }
        f.constant = frac(f.constant);
        auto key = std::make_pair(f.gradient, f.constant);
        auto [it, fresh] = index.emplace(key, comp.families.size());
        if (fresh) comp.families.push_back({std::move(f.gradient), f.constant, {}});
        comp.families[it->second].members.push_back({c, i, k});
      }
    }
  }
  for (VertexId i = 0; i < g.vertex_count(); ++i) {
    for (VertexId k = i + 1; k < g.vertex_count(); ++k) {
      if (!joined_by_all_colors(g, i, k)) continue;
      const Functional fx = pair_functional(comp.chart, {1, 0}, i, k);
      const Functional fy = pair_functional(comp.chart, {0, 1}, i, k);
      if (all_zero(fx.gradient) && all_zero(fy.gradient) && is_integer(fx.constant) && is_integer(fy.constant))
        comp.degeneracies.push_back({Color::kRed, i, k, Rational(0), true});
    }
  }
}

}  // namespace

std::vector<Point> ModuliComponent::positions(const RatVector& t) const {
  if (t.size() != dim())
    throw UsageError("expected " + std::to_string(dim()) + " chart parameters, got " + std::to_string(t.size()));
  const RatVector x = chart.point(t);
  std::vector<Point> out(graph.vertex_count(), Point{Rational(0), Rational(0)});
  for (VertexId v = 1; v < graph.vertex_count(); ++v) out[v] = {x[2 * (v - 1)], x[2 * (v - 1) + 1]};
  return out;
}

bool ModuliComponent::nondegenerate_at(const RatVector& t) const {
  if (fully_degenerate()) return false;
  for (const auto& f : families)
    if (is_integer(f.value(t))) return false;
  for (const auto& [i, k] : graph.parallel_pairs()) {
    if (!joined_by_all_colors(graph, i, k)) continue;
    const auto p = positions(t);
    if (is_integer(p[i][0] - p[k][0]) && is_integer(p[i][1] - p[k][1])) return false;
  }
  return true;
}

std::variant<ModuliComponent, EmptyComponent> based_component(const ColoredCubicGraph& g, const SlopeSystem& s,
                                                              const WindingClass& rho) {
  if (rho.rho.size() != 2 * g.edge_count())
    throw DomainError("invalid_winding_class", "winding class needs " + std::to_string(2 * g.edge_count()) +
                                                   " integers, got " + std::to_string(rho.rho.size()));
  const IntVector m = slope_pairing(g, s, rho);
  RatVector rhs(m.size());
  for (std::size_t e = 0; e < m.size(); ++e) rhs[e] = -m[e];
  auto solved = solve_affine(slope_coboundary(g, s), rhs);
  if (auto* bad = std::get_if<linalg::InconsistentRows>(&solved)) return EmptyComponent{*bad};
  ModuliComponent comp{g, s, rho, std::get<AffineChart>(std::move(solved)), {}, {}};
  build_walls(comp);
  return comp;
}

WindingSearch enumerate_winding_classes(const ColoredCubicGraph& g, const SlopeSystem& s, int bound) {
  if (bound < 0) throw UsageError("winding bound must be >= 0");
  const linalg::IntMatrix a = slope_coboundary(g, s);
  const std::size_t edges = g.edge_count();

  std::vector<IntVector> columns;
  for (std::size_t j = 0; j < a.cols(); ++j) columns.push_back(a.col(j));
  const auto image = linalg::hermite_basis(columns, edges);

  const auto obstructions = linalg::left_kernel(linalg::to_rational(a));
  linalg::IntMatrix y(obstructions.size(), edges);
  for (std::size_t r = 0; r < obstructions.size(); ++r) {
    const IntVector row = linalg::primitive_integer(obstructions[r]);
    for (std::size_t e = 0; e < edges; ++e) y(r, e) = row[e];
  }
  const auto saturation = linalg::integer_kernel(y);

  WindingSearch out;
  out.bound = bound;
  out.class_count = linalg::lattice_index(image, saturation).value();

  // Per cotree edge: distinct pairings with the smallest cochain realizing each.
  struct Option {
    Integer m;
    std::array<Integer, 2> rho;
  };
  const SpanningTree tree = spanning_tree(g);
  std::vector<std::vector<Option>> options;
  std::vector<std::array<Integer, 2>> pairs;
  for (int r = 0; r <= bound; ++r)
    for (int x = -r; x <= r; ++x)
      for (int yv = -r; yv <= r; ++yv)
        if (std::max(std::abs(x), std::abs(yv)) == r) pairs.push_back({Integer(x), Integer(yv)});
  // 0, 1, -1, 2, -2, ...
  auto order = [](const Integer& z) { return z < 0 ? Integer(-2 * z) : Integer(2 * z - 1); };
  for (EdgeId e : tree.cotree_edges) {
    const IntPair& n = s.normal(g.edge(e).color);
    std::map<Integer, std::array<Integer, 2>> best;
    for (const auto& p : pairs) best.emplace(p[0] * as_integer(n[0]) + p[1] * as_integer(n[1]), p);
    std::vector<Option> opts;
    for (auto& [m, p] : best) opts.push_back({m, p});
    std::sort(opts.begin(), opts.end(), [&](const Option& l, const Option& r) { return order(l.m) < order(r.m); });
    options.push_back(std::move(opts));
  }

  std::set<IntVector> residues;
  std::vector<std::size_t> digit(options.size(), 0);
  while (true) {
    ++out.candidates;
    IntVector m(edges, Integer(0));
    WindingClass rho = zero_class(g);
    for (std::size_t c = 0; c < options.size(); ++c) {
      const Option& o = options[c][digit[c]];
      const EdgeId e = tree.cotree_edges[c];
      m[e] = o.m;
      rho.rho[2 * e] = o.rho[0];
      rho.rho[2 * e + 1] = o.rho[1];
    }
    if (all_zero(y.apply(m)) && residues.insert(linalg::reduce_modulo(m, image)).second)
      out.classes.push_back(std::move(rho));
    if (Integer(static_cast<unsigned long>(out.classes.size())) == out.class_count) break;
    std::size_t c = 0;
    while (c < digit.size() && ++digit[c] == options[c].size()) digit[c++] = 0;
    if (c == digit.size()) break;
  }
  out.complete = Integer(static_cast<unsigned long>(out.classes.size())) == out.class_count;
  return out;
}

std::vector<DegeneracyWall> degeneracy_walls(const ModuliComponent& comp) {
  std::vector<DegeneracyWall> walls;
  for (std::size_t fi = 0; fi < comp.families.size(); ++fi) {
    const WallFamily& f = comp.families[fi];
    Rational lo = f.constant, hi = f.constant;
    bool rises = false;
    for (const auto& a : f.gradient) {
      if (a < 0) lo += a;
      if (a > 0) {
        hi += a;
        rises = true;
      }
    }
    // The maximum needs some t_j = 1, outside the half-open box.
    const Integer last = (rises && is_integer(hi)) ? Integer(hi - 1) : floor(hi);
    for (Integer m = ceil(lo); m <= last; ++m)
      for (const auto& mem : f.members) walls.push_back({fi, mem.color, mem.i, mem.k, f.gradient, f.constant, m});
  }
  return walls;
}

std::optional<std::string> check_diagram(const ColoredCubicGraph& g, const SlopeSystem& s,
                                         const std::vector<Point>& points) {
  if (points.size() != g.vertex_count())
    return "expected " + std::to_string(g.vertex_count()) + " points, got " + std::to_string(points.size());
  auto level = [&](Color c, VertexId i, VertexId k) -> Rational {
    const IntPair& n = s.normal(c);
    return (points[i][0] - points[k][0]) * as_integer(n[0]) + (points[i][1] - points[k][1]) * as_integer(n[1]);
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!is_integer(level(edge.color, edge.head, edge.tail)))
      return "edge " + std::to_string(e) + " (" + std::to_string(edge.tail) + "," + std::to_string(edge.head) +
             ") does not lie on a " + std::string(color_name(edge.color)) + " line";
  }
  for (VertexId i = 0; i < g.vertex_count(); ++i) {
    for (VertexId k = i + 1; k < g.vertex_count(); ++k) {
      if (is_integer(points[i][0] - points[k][0]) && is_integer(points[i][1] - points[k][1]))
        return "vertices " + std::to_string(i) + " and " + std::to_string(k) + " coincide";
      for (Color c : kColors)
        if (!g.joined(i, k, c) && is_integer(level(c, i, k)))
          return "vertices " + std::to_string(i) + " and " + std::to_string(k) + " share a " +
                 std::string(color_name(c)) + " line";
    }
  }
  return std::nullopt;
}

GeometricDiagram make_diagram(const ColoredCubicGraph& g, const SlopeSystem& s, std::vector<Point> points) {
  for (auto& p : points) p = {frac(p[0]), frac(p[1])};
  if (auto problem = check_diagram(g, s, points)) throw DomainError("degenerate_point", *problem);
  return {g, s, std::move(points), std::nullopt, std::nullopt};
}

GeometricDiagram realize(const ModuliComponent& c, const RatVector& t) {
  GeometricDiagram d = make_diagram(c.graph, c.slopes, c.positions(t));
  d.rho = c.rho;
  d.parameters = t;
  return d;
}

RatVector halton_point(std::uint64_t index, std::size_t dim) {
  static constexpr std::array<unsigned, 16> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  if (dim > kPrimes.size()) throw UsageError("sampling supports at most 16 chart dimensions");
  RatVector t(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Integer n = static_cast<unsigned long>(index), den = 1;
    Rational r = 0;
    while (n > 0) {
      den *= kPrimes[j];
      const Integer digit = n % kPrimes[j];
      r += Rational(digit, den);
      n /= kPrimes[j];
    }
    r.canonicalize();
    t[j] = r;
  }
  return t;
}

SampleResult sample_nondegenerate(const ModuliComponent& c, const SampleOptions& options) {
  SampleResult out;
  if (c.fully_degenerate()) {
    out.certificates = c.degeneracies;
    return out;
  }
  const std::size_t budget = options.budget_per_wall * std::max<std::size_t>(1, degeneracy_walls(c).size());
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    ++out.attempts;
    const RatVector t = halton_point(options.seed + attempt + 1, c.dim());
    if (!c.nondegenerate_at(t)) continue;
    out.sample = Sample{t, realize(c, t), out.attempts};
    return out;
  }
  return out;
}

ModuliDimension moduli_dimension(const ColoredCubicGraph& g, const SlopeSystem& s, int bound, std::uint64_t seed) {
  ModuliDimension d;
  const linalg::IntMatrix a = slope_coboundary(g, s);
  d.based = a.cols() - linalg::rank(a);
  d.full = d.based + 2;
  for (const auto& rho : enumerate_winding_classes(g, s, bound).classes) {
    auto comp = based_component(g, s, rho);
    if (auto* c = std::get_if<ModuliComponent>(&comp); c && sample_nondegenerate(*c, {seed}).sample) {
      d.nonempty = true;
      break;
    }
  }
  return d;
}

}  // namespace trigrid
