#include "trigrid/obstruct.hpp"

namespace trigrid {

bool lagrangian_embeddable(const SurfaceType& s) {
  if (s.orientable) return s.euler_characteristic == 0;
  const int k = 2 - s.euler_characteristic;
  return k % 4 == 1 || (k % 4 == 2 && k != 2);
}

std::string pair_name(ColorPair p) { return std::string(color_name(p.first)) + "-" + std::string(color_name(p.second)); }

ObstructionReport obstruction_report(const ColoredCubicGraph& g) {
  ObstructionReport r;
  r.surface = surface_type(g);
  r.embeddable = lagrangian_embeddable(r.surface);
  for (std::size_t i = 0; i < 3; ++i) r.link_components[i] = bicolored_cycles(g, kColorPairs[i]).size();
  r.hypothesis =
      "assumes each of the three links bounds Lagrangian disks, one per component, so that the closed surface "
      "has Euler characteristic (bicolored cycles) - b";
  if (r.embeddable) {
    r.summary = r.surface.name() + " admits a Lagrangian embedding; this test gives no obstruction";
    return r;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    ConditionalObstruction c;
    c.obstructed = kColorPairs[i];
    c.fillable = {kColorPairs[(i + 1) % 3], kColorPairs[(i + 2) % 3]};
    c.statement = "if the " + pair_name(c.fillable[0]) + " and " + pair_name(c.fillable[1]) +
                  " links bound Lagrangian disks, the " + pair_name(c.obstructed) + " link does not";
    r.conditionals.push_back(std::move(c));
  }
  r.summary = r.surface.name() + " admits no Lagrangian embedding; at most two of the three links bound disks";
  return r;
}

}  // namespace trigrid
