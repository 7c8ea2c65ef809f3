#include "trigrid/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "trigrid/error.hpp"

namespace trigrid {

std::string_view color_name(Color c) {
  switch (c) {
    case Color::kRed: return "red";
    case Color::kBlue: return "blue";
    case Color::kGreen: return "green";
  }
  return "?";
}

std::optional<Color> parse_color(std::string_view name) {
  for (Color c : kColors)
    if (color_name(c) == name) return c;
  return std::nullopt;
}

namespace {

constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

std::vector<std::vector<VertexId>> components_of(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges)
    if (e.tail < n && e.head < n) parent[find(e.tail)] = find(e.head);
  std::map<std::size_t, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto& [_, vs] : groups) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ColoredCubicGraph::ColoredCubicGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::vector<std::string> problems;
  if (vertex_count_ == 0 || vertex_count_ % 2 != 0)
    problems.push_back("vertex count " + std::to_string(vertex_count_) + " is not a positive even number");
  incidence_.assign(vertex_count_, {kNoEdge, kNoEdge, kNoEdge});
  std::vector<std::array<int, 3>> seen(vertex_count_, {0, 0, 0});
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    Edge& e = edges_[id];
    if (e.tail >= vertex_count_ || e.head >= vertex_count_) {
      problems.push_back("edge " + std::to_string(id) + " references a vertex outside 0.." +
                         std::to_string(vertex_count_ == 0 ? 0 : vertex_count_ - 1));
      continue;
    }
    if (e.tail == e.head) {
      problems.push_back("edge " + std::to_string(id) + " is a self-loop at vertex " + std::to_string(e.tail));
      continue;
    }
    if (e.tail > e.head) std::swap(e.tail, e.head);
    for (VertexId v : {e.tail, e.head}) {
      ++seen[v][index_of(e.color)];
      incidence_[v][index_of(e.color)] = id;
    }
  }
  for (VertexId v = 0; v < vertex_count_; ++v) {
    for (Color c : kColors) {
      const int k = seen[v][index_of(c)];
      if (k != 1)
        problems.push_back("vertex " + std::to_string(v) + " has " + std::to_string(k) + " " +
                           std::string(color_name(c)) + " edges");
    }
  }
  if (vertex_count_ > 0 && edges_.size() != 3 * (vertex_count_ / 2))
    problems.push_back("edge count " + std::to_string(edges_.size()) + " differs from 3b = " +
                       std::to_string(3 * (vertex_count_ / 2)));
  if (problems.empty()) {
    auto comps = components_of(vertex_count_, edges_);
    if (comps.size() > 1) {
      std::string msg = "graph is disconnected; components:";
      for (const auto& comp : comps) {
        msg += " {";
        for (std::size_t i = 0; i < comp.size(); ++i) msg += (i ? "," : "") + std::to_string(comp[i]);
        msg += "}";
      }
      problems.push_back(msg);
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));

  std::map<std::pair<VertexId, VertexId>, int> multiplicity;
  for (const auto& e : edges_) ++multiplicity[{e.tail, e.head}];
  for (const auto& [pair, k] : multiplicity)
    if (k >= 2) parallel_pairs_.push_back(pair);
}

VertexId ColoredCubicGraph::neighbor(VertexId v, Color c) const {
  const Edge& e = edges_[edge_at(v, c)];
  return e.tail == v ? e.head : e.tail;
}

namespace {

struct Token {
  std::vector<std::string> words;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    Token t{{}, number};
    for (std::string w; words >> w;) t.words.push_back(w);
    if (!t.words.empty()) out.push_back(std::move(t));
  }
  return out;
}

VertexId parse_vertex(const std::string& word, std::size_t line) {
  if (word.empty() || !std::all_of(word.begin(), word.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw ParseError(line, "expected a vertex id, got '" + word + "'");
  if (word.size() > 9) throw ParseError(line, "vertex id too large: " + word);
  return static_cast<VertexId>(std::stoul(word));
}

}  // namespace

ColoredCubicGraph parse_graph(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t max_vertex = 0;
  for (const auto& t : tokenize(text)) {
    if (t.words.size() != 3) throw ParseError(t.line, "expected 'u v color'");
    const VertexId u = parse_vertex(t.words[0], t.line), v = parse_vertex(t.words[1], t.line);
    auto color = parse_color(t.words[2]);
    if (!color) throw ParseError(t.line, "unknown color '" + t.words[2] + "' (expected red|blue|green)");
    edges.push_back({u, v, *color});
    max_vertex = std::max({max_vertex, u, v});
  }
  if (edges.empty()) throw ParseError(1, "graph has no edges");
  return ColoredCubicGraph(max_vertex + 1, std::move(edges));
}

CubicMultigraph parse_cubic_multigraph(std::string_view text) {
  CubicMultigraph g;
  std::size_t max_vertex = 0;
  for (const auto& t : tokenize(text)) {
    if (t.words.size() != 2 && t.words.size() != 3) throw ParseError(t.line, "expected 'u v [color]'");
    const VertexId u = parse_vertex(t.words[0], t.line), v = parse_vertex(t.words[1], t.line);
    if (u == v) throw ParseError(t.line, "self-loop at vertex " + std::to_string(u));
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
    max_vertex = std::max({max_vertex, u, v});
  }
  if (g.edges.empty()) throw ParseError(1, "graph has no edges");
  g.vertex_count = max_vertex + 1;
  std::vector<int> degree(g.vertex_count, 0);
  for (auto [u, v] : g.edges) ++degree[u], ++degree[v];
  std::vector<std::string> problems;
  for (VertexId v = 0; v < g.vertex_count; ++v)
    if (degree[v] != 3) problems.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return g;
}

std::string format_graph(const ColoredCubicGraph& g) {
  std::string out;
  for (const auto& e : g.edges())
    out += std::to_string(e.tail) + " " + std::to_string(e.head) + " " + std::string(color_name(e.color)) + "\n";
  return out;
}

namespace {

struct LibraryEntry {
  std::string name;
  std::string description;
  std::size_t vertices;
  std::vector<Edge> edges;
};

const std::vector<LibraryEntry>& library() {
  using enum Color;
  static const std::vector<LibraryEntry> entries = {
      {"theta", "theta graph, b=1", 2, {{0, 1, kRed}, {0, 1, kBlue}, {0, 1, kGreen}}},
      {"k4", "complete graph K4 colored by its three perfect matchings, b=2 (RP^2 type)", 4,
       {{0, 1, kRed}, {2, 3, kRed}, {0, 2, kBlue}, {1, 3, kBlue}, {0, 3, kGreen}, {1, 2, kGreen}}},
      {"doubled4", "4-vertex multigraph with two doubled edges, b=2", 4,
       {{0, 1, kRed}, {0, 1, kBlue}, {2, 3, kRed}, {2, 3, kBlue}, {0, 2, kGreen}, {1, 3, kGreen}}},
      {"k33", "complete bipartite graph K3,3, b=3", 6,
       {{0, 3, kRed}, {1, 4, kRed}, {2, 5, kRed}, {0, 4, kBlue}, {1, 5, kBlue}, {2, 3, kBlue},
        {0, 5, kGreen}, {1, 3, kGreen}, {2, 4, kGreen}}},
      {"prism", "triangular prism, b=3 (Klein bottle type)", 6,
       {{0, 1, kRed}, {3, 4, kRed}, {2, 5, kRed}, {1, 2, kBlue}, {4, 5, kBlue}, {0, 3, kBlue},
        {0, 2, kGreen}, {1, 4, kGreen}, {3, 5, kGreen}}},
      {"torus8", "bipartite 8-vertex graph, b=4 (torus type)", 8,
       {{0, 1, kRed}, {2, 3, kRed}, {4, 5, kRed}, {6, 7, kRed}, {1, 2, kBlue}, {3, 4, kBlue},
        {5, 6, kBlue}, {7, 0, kBlue}, {0, 3, kGreen}, {1, 6, kGreen}, {2, 5, kGreen}, {4, 7, kGreen}}},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& builtin_graph_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : library()) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::optional<ColoredCubicGraph> builtin_graph(std::string_view name) {
  for (const auto& e : library())
    if (e.name == name) return ColoredCubicGraph(e.vertices, e.edges);
  return std::nullopt;
}

std::string builtin_description(std::string_view name) {
  for (const auto& e : library())
    if (e.name == name) return e.description;
  return {};
}

ColoredCubicGraph load_graph(std::string_view name_or_path) {
  if (auto g = builtin_graph(name_or_path)) return *g;
  std::ifstream in{std::string(name_or_path)};
  if (!in) throw UsageError("'" + std::string(name_or_path) + "' is neither a builtin graph nor a readable file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

Bipartition bipartition(const ColoredCubicGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<VertexId> parent(n, n);
  std::vector<std::size_t> depth(n, 0);
  side[0] = 0;
  std::vector<VertexId> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const VertexId v = queue[qi];
    for (Color c : kColors) {
      const VertexId w = g.neighbor(v, c);
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        parent[w] = v;
        depth[w] = depth[v] + 1;
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        // Odd cycle: tree paths from v and w up to their common ancestor.
        std::vector<VertexId> up_v{v}, up_w{w};
        VertexId a = v, b = w;
        while (depth[a] > depth[b]) up_v.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
        while (a != b) {
          up_v.push_back(a = parent[a]);
          up_w.push_back(b = parent[b]);
        }
        Bipartition out;
        out.odd_cycle = up_v;
        for (std::size_t i = up_w.size() - 1; i-- > 0;) out.odd_cycle.push_back(up_w[i]);
        return out;
      }
    }
  }
  Bipartition out;
  out.sides.emplace(n);
  for (VertexId v = 0; v < n; ++v) (*out.sides)[v] = side[v] == 0 ? Side::kX : Side::kO;
  return out;
}

std::vector<std::vector<VertexId>> bicolored_cycles(const ColoredCubicGraph& g, ColorPair pair) {
  std::vector<bool> visited(g.vertex_count(), false);
  std::vector<std::vector<VertexId>> cycles;
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (visited[start]) continue;
    std::vector<VertexId> cycle;
    VertexId v = start;
    bool first = true;
    do {
      cycle.push_back(v);
      visited[v] = true;
      v = g.neighbor(v, first ? pair.first : pair.second);
      first = !first;
    } while (v != start || !first);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::string SurfaceType::name() const {
  switch (form) {
    case Form::kSphere: return "sphere";
    case Form::kTorus: return "torus(" + std::to_string(count) + ")";
    case Form::kProjectiveSum: return "projective_sum(" + std::to_string(count) + ")";
  }
  return "?";
}

SurfaceType surface_from(bool orientable, int chi) {
  SurfaceType s;
  s.orientable = orientable;
  s.euler_characteristic = chi;
  if (orientable) {
    if (chi % 2 != 0 || chi > 2) throw DomainError("invalid_surface", "orientable surface needs even chi <= 2");
    s.form = chi == 2 ? SurfaceType::Form::kSphere : SurfaceType::Form::kTorus;
    s.count = (2 - chi) / 2;
  } else {
    if (chi > 1) throw DomainError("invalid_surface", "nonorientable surface needs chi <= 1");
    s.form = SurfaceType::Form::kProjectiveSum;
    s.count = 2 - chi;
  }
  return s;
}

SurfaceType surface_type(const ColoredCubicGraph& g) {
  std::size_t cycles = 0;
  for (const auto& pair : kColorPairs) cycles += bicolored_cycles(g, pair).size();
  const int chi = static_cast<int>(cycles) - static_cast<int>(g.bridge_number());
  return surface_from(bipartition(g).bipartite(), chi);
}

namespace {

ColoredCubicGraph apply_coloring(const CubicMultigraph& g, const std::vector<Color>& colors) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edges.size(); ++i) edges.push_back({g.edges[i].first, g.edges[i].second, colors[i]});
  return ColoredCubicGraph(g.vertex_count, std::move(edges));
}

}  // namespace

ColoringSearch enumerate_tait_colorings(const CubicMultigraph& g) {
  ColoringSearch out;
  const std::size_t m = g.edges.size();
  std::vector<std::array<bool, 3>> used(g.vertex_count, {false, false, false});
  std::vector<Color> colors(m, Color::kRed);
  std::set<std::vector<std::uint8_t>> seen;
  auto recurse = [&](auto&& self, std::size_t e) -> void {
    if (e == m) {
      ++out.raw_count;
      // Normalize by relabeling colors in order of first appearance.
      std::array<int, 3> map{-1, -1, -1};
      int next = 0;
      std::vector<std::uint8_t> key(m);
      for (std::size_t i = 0; i < m; ++i) {
        auto& slot = map[index_of(colors[i])];
        if (slot < 0) slot = next++;
        key[i] = static_cast<std::uint8_t>(slot);
      }
      if (seen.insert(key).second) {
        std::vector<Color> normalized(m);
        for (std::size_t i = 0; i < m; ++i) normalized[i] = static_cast<Color>(key[i]);
        try {
          out.classes.push_back(apply_coloring(g, normalized));
        } catch (const ValidationError&) {
          // disconnected inputs still count as colorings but carry no graph
        }
      }
      return;
    }
    const auto [u, v] = g.edges[e];
    for (Color c : kColors) {
      if (used[u][index_of(c)] || used[v][index_of(c)]) continue;
      used[u][index_of(c)] = used[v][index_of(c)] = true;
      colors[e] = c;
      self(self, e + 1);
      used[u][index_of(c)] = used[v][index_of(c)] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}

ColoredCubicGraph relabeled(const ColoredCubicGraph& g, const std::vector<VertexId>& relabel) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    VertexId a = relabel[e.tail], b = relabel[e.head];
    edges.push_back({std::min(a, b), std::max(a, b), e.color});
  }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.color, x.tail, x.head) < std::tie(y.color, y.tail, y.head);
  });
  return ColoredCubicGraph(g.vertex_count(), std::move(edges));
}

CanonicalForm canonical_form(const ColoredCubicGraph& g) {
  const std::size_t n = g.vertex_count();
  std::optional<CanonicalForm> best;
  for (VertexId start = 0; start < n; ++start) {
    std::vector<VertexId> label(n, n);
    std::vector<VertexId> order{start};
    label[start] = 0;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      for (Color c : kColors) {
        const VertexId w = g.neighbor(order[qi], c);
        if (label[w] == n) {
          label[w] = order.size();
          order.push_back(w);
        }
      }
    }
    ColoredCubicGraph candidate = relabeled(g, label);
    auto key = [](const ColoredCubicGraph& h) {
      std::vector<std::tuple<int, VertexId, VertexId>> k;
      for (const auto& e : h.edges()) k.emplace_back(static_cast<int>(e.color), e.tail, e.head);
      return k;
    };
    if (!best || key(candidate) < key(best->graph)) best = CanonicalForm{std::move(candidate), std::move(label)};
  }
  return *best;
}

bool isomorphic(const ColoredCubicGraph& a, const ColoredCubicGraph& b) {
  return a.vertex_count() == b.vertex_count() && canonical_form(a).graph == canonical_form(b).graph;
}

ColoredCubicGraph random_tait_graph(std::size_t b, std::mt19937_64& rng, bool simple) {
  const std::size_t n = 2 * b;
  while (true) {
    std::vector<Edge> edges;
    for (Color c : kColors) {
      std::vector<VertexId> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = 0; i < n; i += 2)
        edges.push_back({std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1]), c});
    }
    try {
      ColoredCubicGraph g(n, std::move(edges));
      if (simple && !g.parallel_pairs().empty()) continue;
      return g;
    } catch (const ValidationError&) {
      // disconnected; resample
    }
  }
}

namespace {

void perfect_matchings(std::vector<VertexId>& free, std::vector<std::pair<VertexId, VertexId>>& current,
                       std::vector<std::vector<std::pair<VertexId, VertexId>>>& out) {
  if (free.empty()) {
    out.push_back(current);
    return;
  }
  const VertexId a = free.front();
  for (std::size_t i = 1; i < free.size(); ++i) {
    const VertexId b = free[i];
    std::vector<VertexId> rest;
    for (std::size_t j = 1; j < free.size(); ++j)
      if (j != i) rest.push_back(free[j]);
    current.emplace_back(a, b);
    perfect_matchings(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ColoredCubicGraph> all_tait_graphs(std::size_t b) {
  if (b == 0 || b > 5) throw UsageError("exhaustive graph search supports 1 <= b <= 5");
  const std::size_t n = 2 * b;
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<std::pair<VertexId, VertexId>>> matchings;
  std::vector<std::pair<VertexId, VertexId>> current;
  perfect_matchings(all, current, matchings);

  std::map<std::string, ColoredCubicGraph> seen;
  for (const auto& blue : matchings) {
    for (const auto& green : matchings) {
      std::vector<Edge> edges;
      for (VertexId v = 0; v < n; v += 2) edges.push_back({v, v + 1, Color::kRed});
      for (const auto& [x, y] : blue) edges.push_back({x, y, Color::kBlue});
      for (const auto& [x, y] : green) edges.push_back({x, y, Color::kGreen});
      try {
        CanonicalForm cf = canonical_form(ColoredCubicGraph(n, std::move(edges)));
        seen.emplace(format_graph(cf.graph), std::move(cf.graph));
      } catch (const ValidationError&) {
        // disconnected
      }
    }
  }
  std::vector<ColoredCubicGraph> out;
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace trigrid
