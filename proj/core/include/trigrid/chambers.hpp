#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigrid/diagram.hpp"
#include "trigrid/moduli.hpp"

namespace trigrid {

// A connected component of the chart torus minus the walls. Over R^dim each
// component is the convex set where floor(f_w) = floors[w] for every family;
// two such sets give the same torus chamber when their floor vectors differ
// by (a_w . z)_w for some integer z.
struct Chamber {
  std::size_t id = 0;
  IntVector floors;   // of the representative cell, which lies in the unit box
  RatVector witness;  // strict interior point of the representative cell
  std::vector<int> signs;  // per degeneracy_walls entry: +1 or -1 at the witness
  CombinatorialType type;
  std::size_t cells = 0;  // pieces of the unit box belonging to this chamber
};

struct ChamberOptions {
  std::size_t dimension_cap = 3;
  bool best_effort = false;
};

struct ChamberSet {
  std::vector<Chamber> chambers;
  std::vector<IntVector> lattice;  // Hermite basis of {(a_w . z)_w}
  std::size_t cells = 0;

  // Chamber containing the region with these floors, if any.
  std::optional<std::size_t> find(const IntVector& floors) const;
};

// Throws DomainError "dimension_too_large" above the cap unless best_effort.
ChamberSet enumerate_chambers(const ModuliComponent& c, const ChamberOptions& options = {});

struct Move {
  std::size_t from = 0, to = 0;
  std::size_t family = 0;
  Integer level;                     // f_family = level on the facet, in from's coordinates
  std::vector<std::size_t> also;     // coincident families crossed at the same time
  RatVector witness;                 // facet point reduced into [0,1)^dim
  std::size_t walls_through = 0;     // families integral at the witness
};

// One move per facet, taken from the side where the crossed functional grows.
std::vector<Move> chamber_adjacency(const ModuliComponent& c, const ChamberSet& set);

struct CommonLocus {
  std::size_t first = 0, second = 0;  // families cut out at the locus
  Integer first_level, second_level;
  RatVector point;                    // relative interior point, reduced into [0,1)^dim
  std::vector<std::size_t> through;   // every family vanishing there
  std::vector<std::size_t> touched;   // chambers having the point in their closure
};

// Codimension-2 face of chamber 0 touching the most chambers. Empty below
// dimension 2.
std::optional<CommonLocus> common_locus(const ModuliComponent& c, const ChamberSet& set);

struct ModuliOptions {
  int bound = 1;
  SampleOptions sampling;
  ChamberOptions chambers;
  bool compute_chambers = true;
};

struct ComponentSummary {
  std::size_t index = 0;  // position in the winding class enumeration
  ModuliComponent component;
  SampleResult sample;
  std::optional<ChamberSet> chambers;
  std::vector<std::string> notes;
};

struct DroppedComponent {
  std::size_t index = 0;
  WindingClass rho;
  std::vector<DegeneracyCertificate> certificates;
};

struct ModuliReport {
  ColoredCubicGraph graph;
  SlopeSystem slopes;
  ModuliOptions options;
  WindingSearch search;
  std::size_t based_dimension = 0;
  std::vector<ComponentSummary> components;
  std::vector<DroppedComponent> dropped;

  bool empty() const { return components.empty(); }
  std::size_t dimension() const { return based_dimension + 2; }
};

// Every winding class within the bound, with fully degenerate components
// dropped (and listed with their certificates).
ModuliReport full_moduli(const ColoredCubicGraph& g, const SlopeSystem& s, const ModuliOptions& options = {});

}  // namespace trigrid
