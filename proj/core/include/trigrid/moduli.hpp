#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigrid/graph.hpp"
#include "trigrid/homology.hpp"
#include "trigrid/linalg.hpp"
#include "trigrid/slopes.hpp"

namespace trigrid {

// Integer edge cochain with Z^2 coefficients, interleaved
// (x of edge 0, y of edge 0, x of edge 1, ...).
struct WindingClass {
  IntVector rho;
  bool is_zero() const;
  friend bool operator==(const WindingClass&, const WindingClass&) = default;
};

WindingClass zero_class(const ColoredCubicGraph& g);

// Row e holds n_c on the head block and -n_c on the tail block of edge e.
// Based form drops vertex 0 (columns 0 and 1).
linalg::IntMatrix slope_coboundary(const ColoredCubicGraph& g, const SlopeSystem& s, bool based = true);

// m_e = <n_c, rho_e>.
IntVector slope_pairing(const ColoredCubicGraph& g, const SlopeSystem& s, const WindingClass& rho);

using Point = std::array<Rational, 2>;

// A degeneracy present on the whole component: a functional that is a
// constant integer, or a pair joined by all three colors that always
// coincides.
struct DegeneracyCertificate {
  Color color = Color::kRed;
  VertexId i = 0, k = 0;
  Rational value;
  bool coincident = false;
};

// Affine functional <n_c, p_i(t) - p_k(t)> = constant + gradient . t over
// chart parameters. Every pair of vertices lacking a c-edge contributes one;
// parallel functionals with the same constant mod 1 share a family.
struct WallFamily {
  IntVector gradient;  // first nonzero entry positive
  Rational constant;   // in [0, 1)
  struct Member {
    Color color;
    VertexId i, k;
  };
  std::vector<Member> members;

  Rational value(const RatVector& t) const;
};

// One hyperplane f(t) = offset of a family, meeting the fundamental box.
struct DegeneracyWall {
  std::size_t family;
  Color color;
  VertexId i, k;
  IntVector gradient;
  Rational constant;
  Integer offset;
};

struct ModuliComponent {
  ColoredCubicGraph graph;
  SlopeSystem slopes;
  WindingClass rho;
  AffineChart chart;  // ambient 4b - 2, vertex 0 pinned at the origin
  std::vector<WallFamily> families;
  std::vector<DegeneracyCertificate> degeneracies;

  std::size_t dim() const { return chart.dim(); }
  bool fully_degenerate() const { return !degeneracies.empty(); }

  // Unreduced positions (x, y) of every vertex at chart parameters t.
  std::vector<Point> positions(const RatVector& t) const;
  // True when no family is integral at t and no pair coincides.
  bool nondegenerate_at(const RatVector& t) const;
};

struct EmptyComponent {
  linalg::InconsistentRows certificate;
};

// Solves <n_c, rho_e + X_head - X_tail> = 0 for the based unknowns.
// Throws DomainError when rho has the wrong length.
std::variant<ModuliComponent, EmptyComponent> based_component(const ColoredCubicGraph& g, const SlopeSystem& s,
                                                              const WindingClass& rho);

struct WindingSearch {
  std::vector<WindingClass> classes;  // feasible and pairwise inequivalent; zero first
  Integer class_count;                // number of feasible classes overall
  bool complete = false;              // classes.size() == class_count
  std::size_t candidates = 0;
  int bound = 0;
};

// Candidates are Z^2 cochains supported on the cotree edges of the BFS
// spanning tree with coordinates in [-W, W]. Two cochains give the same
// component exactly when their slope pairings differ by an element of
// A(Z^{2V}), A the slope coboundary; the count of such classes is finite.
WindingSearch enumerate_winding_classes(const ColoredCubicGraph& g, const SlopeSystem& s, int bound);

// Walls of every family meeting [0,1)^dim.
std::vector<DegeneracyWall> degeneracy_walls(const ModuliComponent& c);

struct GeometricDiagram {
  ColoredCubicGraph graph;
  SlopeSystem slopes;
  std::vector<Point> points;  // reduced into [0,1)^2
  std::optional<WindingClass> rho;
  std::optional<RatVector> parameters;
};

// Throws DomainError "degenerate_point" naming the violated pair and color.
GeometricDiagram realize(const ModuliComponent& c, const RatVector& t);

// Builds a diagram from raw points; same checks as realize.
GeometricDiagram make_diagram(const ColoredCubicGraph& g, const SlopeSystem& s, std::vector<Point> points);

// Empty when every condition holds, otherwise a description of one violation.
std::optional<std::string> check_diagram(const ColoredCubicGraph& g, const SlopeSystem& s,
                                         const std::vector<Point>& points);

struct SampleOptions {
  std::uint64_t seed = 0;
  std::size_t budget_per_wall = 64;
};

struct Sample {
  RatVector parameters;
  GeometricDiagram diagram;
  std::size_t attempts = 0;
};

struct SampleResult {
  std::optional<Sample> sample;
  std::vector<DegeneracyCertificate> certificates;  // set when the chart lies inside D
  std::size_t attempts = 0;
};

// Halton points in prime bases, indices seed + 1, seed + 2, ...
SampleResult sample_nondegenerate(const ModuliComponent& c, const SampleOptions& options = {});

RatVector halton_point(std::uint64_t index, std::size_t dim);

struct ModuliDimension {
  std::size_t based = 0;  // linear dimension of any component
  std::size_t full = 2;
  bool nonempty = false;
};

ModuliDimension moduli_dimension(const ColoredCubicGraph& g, const SlopeSystem& s, int bound = 1,
                                 std::uint64_t seed = 0);

}  // namespace trigrid
