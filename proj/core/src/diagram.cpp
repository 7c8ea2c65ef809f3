#include "trigrid/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <type_traits>

#include "trigrid/error.hpp"

namespace trigrid {

std::size_t CombinatorialDiagram::level(Color c, VertexId v) const {
  const Cell& cell = cells.at(v);
  switch (c) {
    case Color::kRed: return cell.col;
    case Color::kBlue: return cell.row;
    default: return (cell.col + cell.row + (cell.triangle == Triangle::kUpper ? 1 : 0)) % n;
  }
}

std::optional<std::string> check_combinatorial(const CombinatorialDiagram& d) {
  if (d.n == 0) return "grid size must be positive";
  std::map<Cell, VertexId> slots;
  for (VertexId v = 0; v < d.cells.size(); ++v) {
    const Cell& c = d.cells[v];
    if (c.col >= d.n || c.row >= d.n) return "vertex " + std::to_string(v) + " lies outside the grid";
    if (auto [it, fresh] = slots.emplace(c, v); !fresh)
      return "vertices " + std::to_string(it->second) + " and " + std::to_string(v) + " share a triangle";
  }
  for (Color c : kColors) {
    std::vector<std::size_t> count(d.n, 0);
    for (VertexId v = 0; v < d.cells.size(); ++v) ++count[d.level(c, v)];
    for (std::size_t k = 0; k < d.n; ++k)
      if (count[k] != 0 && count[k] != 2)
        return std::string(color_name(c)) + " line " + std::to_string(k) + " carries " + std::to_string(count[k]) +
               " points";
  }
  return std::nullopt;
}

namespace {

using Word = CombinatorialType::Word;

Word minimal_rotation(Word w) {
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    best = std::min(best, w);
  }
  return best;
}

// Groups vertices by a totally ordered level key; each group must be a pair.
template <typename Key>
Word word_from_levels(const std::vector<Key>& level, Color c) {
  std::map<Key, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < level.size(); ++v) groups[level[v]].push_back(v);
  Word w;
  for (auto& [key, vs] : groups) {
    if (vs.size() != 2)
      throw DomainError("degenerate_point", "a " + std::string(color_name(c)) + " line carries " +
                                                std::to_string(vs.size()) + " points");
    w.emplace_back(vs[0], vs[1]);
  }
  return minimal_rotation(std::move(w));
}

std::vector<Rational> geometric_levels(const GeometricDiagram& d, Color c) {
  const IntPair& n = d.slopes.normal(c);
  std::vector<Rational> out;
  for (const auto& p : d.points)
    out.push_back(frac(p[0] * Integer(static_cast<long>(n[0])) + p[1] * Integer(static_cast<long>(n[1]))));
  return out;
}

std::vector<std::size_t> grid_levels(const CombinatorialDiagram& d, Color c) {
  std::vector<std::size_t> out;
  for (VertexId v = 0; v < d.cells.size(); ++v) out.push_back(d.level(c, v));
  return out;
}

template <typename Key>
GridProjection project(const std::vector<Key>& first, const std::vector<Key>& second, ColorPair colors,
                       std::optional<std::size_t> grid) {
  GridProjection p;
  p.colors = colors;
  p.classes.assign(first.size(), {0, 0});
  const std::array<const std::vector<Key>*, 2> levels = {&first, &second};
  for (std::size_t side = 0; side < 2; ++side) {
    std::map<Key, std::vector<VertexId>> groups;
    for (VertexId v = 0; v < first.size(); ++v) groups[(*levels[side])[v]].push_back(v);
    std::size_t index = 0;
    for (auto& [key, vs] : groups) {
      std::size_t cls = index++;
      if constexpr (std::is_same_v<Key, std::size_t>) cls = key;
      for (VertexId v : vs) p.classes[v][side] = cls;
      if (vs.size() == 2) p.pairing[side].emplace_back(vs[0], vs[1]);
    }
    p.size = grid ? *grid : groups.size();
  }
  return p;
}

}  // namespace

std::string CombinatorialType::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < 3; ++c) {
    if (c) out += " | ";
    out += std::string(color_name(kColors[c])) + ":";
    for (const auto& [a, b] : words[c]) out += " " + std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

CombinatorialType combinatorial_type(const GeometricDiagram& d) {
  CombinatorialType t;
  for (Color c : kColors) t.words[index_of(c)] = word_from_levels(geometric_levels(d, c), c);
  return t;
}

CombinatorialType combinatorial_type(const CombinatorialDiagram& d) {
  CombinatorialType t;
  for (Color c : kColors) t.words[index_of(c)] = word_from_levels(grid_levels(d, c), c);
  return t;
}

CombinatorialType relabeled(const CombinatorialType& t, const std::vector<VertexId>& relabel) {
  CombinatorialType out;
  for (std::size_t c = 0; c < 3; ++c) {
    Word w;
    for (const auto& [a, b] : t.words[c]) w.emplace_back(std::min(relabel[a], relabel[b]), std::max(relabel[a], relabel[b]));
    out.words[c] = minimal_rotation(std::move(w));
  }
  return out;
}

CombinatorialDiagram snap(const GeometricDiagram& d) {
  if (!d.slopes.is_standard())
    throw DomainError("nonstandard_slopes", "snapping to a grid needs the standard slope system");
  RatVector coords;
  for (const auto& p : d.points) {
    coords.push_back(p[0]);
    coords.push_back(p[1]);
  }
  const Integer n = lcm_of_denominators(coords);
  if (!n.fits_ulong_p()) throw DomainError("grid_too_large", "common denominator " + trigrid::to_string(n));
  CombinatorialDiagram out;
  out.n = n.get_ui();
  for (const auto& p : d.points) {
    const Rational a = p[0] * n, b = p[1] * n;
    out.cells.push_back({a.get_num().get_ui(), b.get_num().get_ui(), Triangle::kLower});
  }
  return out;
}

std::array<GridProjection, 3> grid_projections(const GeometricDiagram& d) {
  std::array<GridProjection, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [c1, c2] = kColorPairs[i];
    out[i] = project(geometric_levels(d, c1), geometric_levels(d, c2), kColorPairs[i], std::nullopt);
  }
  return out;
}

std::array<GridProjection, 3> grid_projections(const CombinatorialDiagram& d) {
  std::array<GridProjection, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [c1, c2] = kColorPairs[i];
    out[i] = project(grid_levels(d, c1), grid_levels(d, c2), kColorPairs[i], d.n);
  }
  return out;
}

LinkComponents link_components(const GridProjection& p) {
  const std::size_t count = p.classes.size();
  std::array<std::vector<VertexId>, 2> partner;
  for (std::size_t side = 0; side < 2; ++side) {
    partner[side].assign(count, count);
    for (const auto& [a, b] : p.pairing[side]) {
      partner[side][a] = b;
      partner[side][b] = a;
    }
  }
  LinkComponents out;
  std::vector<bool> seen(count, false);
  for (VertexId start = 0; start < count; ++start) {
    if (seen[start] || partner[0][start] == count) continue;
    std::vector<VertexId> cycle;
    VertexId v = start;
    std::size_t side = 0;
    do {
      seen[v] = true;
      cycle.push_back(v);
      v = partner[side][v];
      side ^= 1;
    } while (!(v == start && side == 0) && v != count);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::optional<std::vector<Side>> mark_orientation(const ColoredCubicGraph& g) { return bipartition(g).sides; }

std::optional<std::vector<Side>> mark_orientation(const GeometricDiagram& d) { return mark_orientation(d.graph); }

}  // namespace trigrid
