#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trigrid/graph.hpp"

namespace trigrid {

using IntPair = std::array<std::int64_t, 2>;

// Line families on the torus, one per color, given by primitive integer
// normals: a c-colored edge (i, j) requires <n_c, p_j - p_i> to be an integer.
class SlopeSystem {
 public:
  // red (1,0): equal x; blue (0,1): equal y; green (1,1): equal x + y.
  static SlopeSystem standard();
  static SlopeSystem from_normals(IntPair red, IntPair blue, IntPair green);
  // Normals are the 90-degree rotations of the primitive directions.
  static SlopeSystem from_directions(IntPair red, IntPair blue, IntPair green);

  const IntPair& normal(Color c) const { return normals_[index_of(c)]; }
  bool is_standard() const;

  // "standard", or a spec string when built from a Markov triple.
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  friend bool operator==(const SlopeSystem& a, const SlopeSystem& b) { return a.normals_ == b.normals_; }

 private:
  explicit SlopeSystem(std::array<IntPair, 3> normals);
  std::array<IntPair, 3> normals_;
  std::string label_;
};

struct MarkovTriple {
  std::int64_t a = 1, b = 1, c = 1;
  bool valid() const;
  friend auto operator<=>(const MarkovTriple&, const MarkovTriple&) = default;
};

// Vieta involution replacing the entry at `position` (0, 1, 2).
MarkovTriple mutate(const MarkovTriple& t, int position);

// Every Markov triple with all entries <= bound, sorted ascending within each
// triple, the list sorted lexicographically.
std::vector<MarkovTriple> enumerate_markov(std::int64_t bound);

struct SlopeTriple {
  IntPair gamma;
  SlopeSystem system;
};

// Solves a^2 alpha + b^2 beta + c^2 gamma = 0 for gamma. Throws DomainError
// when gamma is not integral.
SlopeTriple solve_slope_triple(const MarkovTriple& t, IntPair alpha, IntPair beta);

// "standard" or "a,b,c:ax,ay:bx,by".
SlopeSystem parse_slopes(std::string_view spec);

IntPair primitive(IntPair v);

}  // namespace trigrid
