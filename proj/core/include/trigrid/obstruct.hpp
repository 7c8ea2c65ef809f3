#pragma once

#include <string>
#include <vector>

#include "trigrid/graph.hpp"

namespace trigrid {

// Torus among orientable surfaces; #k RP^2 when k = 1 (mod 4), or
// k = 2 (mod 4) with k != 2.
bool lagrangian_embeddable(const SurfaceType& s);

struct ConditionalObstruction {
  std::array<ColorPair, 2> fillable;  // links assumed to bound disks
  ColorPair obstructed;
  std::string statement;
};

struct ObstructionReport {
  SurfaceType surface;
  bool embeddable = false;
  std::array<std::size_t, 3> link_components{};  // per kColorPairs entry
  std::string hypothesis;
  std::vector<ConditionalObstruction> conditionals;  // empty when embeddable
  std::string summary;
};

ObstructionReport obstruction_report(const ColoredCubicGraph& g);

std::string pair_name(ColorPair p);

}  // namespace trigrid
