#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigrid/graph.hpp"
#include "trigrid/moduli.hpp"

namespace trigrid {

enum class Triangle : std::uint8_t { kLower, kUpper };

struct Cell {
  std::size_t col = 0, row = 0;
  Triangle triangle = Triangle::kLower;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Grid of size n on the torus. Vertex v sits in cells[v]. The lower triangle
// of (col, row) lies on diagonal col + row, the upper one on col + row + 1.
struct CombinatorialDiagram {
  std::size_t n = 0;
  std::vector<Cell> cells;

  std::size_t level(Color c, VertexId v) const;
  std::size_t diagonal(VertexId v) const { return level(Color::kGreen, v); }
};

// Empty when occupancy holds: every used column, row and diagonal carries
// exactly two points and no triangle holds two.
std::optional<std::string> check_combinatorial(const CombinatorialDiagram& d);

// Levels in increasing order, each labeled by its sorted vertex pair, rotated
// to the lexicographically smallest word.
struct CombinatorialType {
  using Word = std::vector<std::pair<VertexId, VertexId>>;
  std::array<Word, 3> words;
  friend auto operator<=>(const CombinatorialType&, const CombinatorialType&) = default;
  std::string to_string() const;
};

CombinatorialType combinatorial_type(const GeometricDiagram& d);
CombinatorialType combinatorial_type(const CombinatorialDiagram& d);

// The same type after renaming vertex v to relabel[v].
CombinatorialType relabeled(const CombinatorialType& t, const std::vector<VertexId>& relabel);

// Requires the standard slopes. Grid size is the common denominator N of the
// coordinates; the point (a/N, b/N) goes to the lower triangle of (a, b).
CombinatorialDiagram snap(const GeometricDiagram& d);

struct GridProjection {
  ColorPair colors;  // (red, blue) = (x, y), (blue, green) = (y, z), (green, red) = (z, x)
  std::size_t size = 0;
  // Per vertex, the index of its level among the occupied levels of each color.
  std::vector<std::array<std::size_t, 2>> classes;
  // Per occupied level of each color, the two vertices sharing it.
  std::array<std::vector<std::pair<VertexId, VertexId>>, 2> pairing;
};

std::array<GridProjection, 3> grid_projections(const GeometricDiagram& d);
std::array<GridProjection, 3> grid_projections(const CombinatorialDiagram& d);

struct LinkComponents {
  std::vector<std::vector<VertexId>> cycles;
  std::size_t count() const { return cycles.size(); }
};

LinkComponents link_components(const GridProjection& p);

// Labels every vertex X or O so each occupied line carries one of each, or
// nullopt for a non-bipartite graph.
std::optional<std::vector<Side>> mark_orientation(const ColoredCubicGraph& g);
std::optional<std::vector<Side>> mark_orientation(const GeometricDiagram& d);

// Throws UsageError for anything but "svg" or "ascii".
std::string render(const CombinatorialDiagram& d, std::string_view format);
std::string render(const GeometricDiagram& d, std::string_view format);

}  // namespace trigrid
