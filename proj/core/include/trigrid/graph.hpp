#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trigrid {

enum class Color : std::uint8_t { kRed = 0, kBlue = 1, kGreen = 2 };

inline constexpr std::array<Color, 3> kColors = {Color::kRed, Color::kBlue, Color::kGreen};

std::string_view color_name(Color c);
std::optional<Color> parse_color(std::string_view name);
inline std::size_t index_of(Color c) { return static_cast<std::size_t>(c); }

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId tail;
  VertexId head;
  Color color;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Abstract Tait-colored cubic multigraph. Construction validates: every vertex
// meets exactly one edge of each color and the graph is connected. Edges are
// stored with tail < head; ids are list positions.
class ColoredCubicGraph {
 public:
  ColoredCubicGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t bridge_number() const noexcept { return vertex_count_ / 2; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  EdgeId edge_at(VertexId v, Color c) const { return incidence_.at(v)[index_of(c)]; }
  VertexId neighbor(VertexId v, Color c) const;
  bool joined(VertexId a, VertexId b, Color c) const { return neighbor(a, c) == b; }

  // Vertex pairs joined by two or more edges.
  const std::vector<std::pair<VertexId, VertexId>>& parallel_pairs() const noexcept { return parallel_pairs_; }

  friend bool operator==(const ColoredCubicGraph& a, const ColoredCubicGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::array<EdgeId, 3>> incidence_;
  std::vector<std::pair<VertexId, VertexId>> parallel_pairs_;
};

// Cubic multigraph without colors, input to the coloring search.
struct CubicMultigraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

// Edge-list format: one `u v color` per line, `#` starts a comment.
ColoredCubicGraph parse_graph(std::string_view text);
// Same format; a trailing color token is accepted and ignored.
CubicMultigraph parse_cubic_multigraph(std::string_view text);
std::string format_graph(const ColoredCubicGraph& g);

const std::vector<std::string>& builtin_graph_names();
std::optional<ColoredCubicGraph> builtin_graph(std::string_view name);
std::string builtin_description(std::string_view name);

// Builtin name, or else the path to a graph file.
ColoredCubicGraph load_graph(std::string_view name_or_path);

enum class Side : std::uint8_t { kX, kO };

struct Bipartition {
  std::optional<std::vector<Side>> sides;  // set when bipartite
  std::vector<VertexId> odd_cycle;         // witness otherwise (closed walk, first vertex not repeated)
  bool bipartite() const { return sides.has_value(); }
};

Bipartition bipartition(const ColoredCubicGraph& g);

using ColorPair = std::pair<Color, Color>;
inline constexpr std::array<ColorPair, 3> kColorPairs = {
    ColorPair{Color::kRed, Color::kBlue}, ColorPair{Color::kBlue, Color::kGreen},
    ColorPair{Color::kGreen, Color::kRed}};

// Cycle decomposition of the 2-regular subgraph on two colors. Each cycle
// starts at its smallest vertex and leaves along the first color of the pair.
std::vector<std::vector<VertexId>> bicolored_cycles(const ColoredCubicGraph& g, ColorPair pair);

struct SurfaceType {
  enum class Form { kSphere, kTorus, kProjectiveSum };
  bool orientable = true;
  int euler_characteristic = 2;
  Form form = Form::kSphere;
  int count = 0;  // genus for kTorus, number of RP^2 summands for kProjectiveSum
  std::string name() const;
  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

SurfaceType surface_from(bool orientable, int euler_characteristic);
SurfaceType surface_type(const ColoredCubicGraph& g);

struct ColoringSearch {
  std::size_t raw_count = 0;                     // proper 3-edge-colorings
  std::vector<ColoredCubicGraph> classes;         // up to global color permutation
};

ColoringSearch enumerate_tait_colorings(const CubicMultigraph& g);

// Canonical relabeling under colored isomorphism. `relabel[v]` is the new id
// of vertex v in `graph`.
struct CanonicalForm {
  ColoredCubicGraph graph;
  std::vector<VertexId> relabel;
};

CanonicalForm canonical_form(const ColoredCubicGraph& g);
bool isomorphic(const ColoredCubicGraph& a, const ColoredCubicGraph& b);

ColoredCubicGraph relabeled(const ColoredCubicGraph& g, const std::vector<VertexId>& relabel);

// Union of three independent uniformly random perfect matchings, resampled
// until connected (and simple, when requested).
ColoredCubicGraph random_tait_graph(std::size_t bridge_number, std::mt19937_64& rng, bool simple = false);

// Every connected Tait-colored cubic multigraph on 2b vertices up to colored
// isomorphism, in canonical form, sorted by edge-list text. b <= 5.
std::vector<ColoredCubicGraph> all_tait_graphs(std::size_t bridge_number);

}  // namespace trigrid
