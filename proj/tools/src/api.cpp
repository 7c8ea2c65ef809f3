#include "api.hpp"

#include <functional>
#include <map>

#include "trigrid/error.hpp"

namespace trigrid::api {

namespace {

struct Context {
  const Json& req;

  template <typename T>
  T get(const char* key, T fallback) const {
    if (!req.contains(key) || req[key].is_null()) return fallback;
    try {
      return req[key].get<T>();
    } catch (const nlohmann::json::exception&) {
      throw UsageError(std::string("field '") + key + "' has the wrong type");
    }
  }

  const Json& need(const char* key) const {
    if (!req.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
    return req[key];
  }

  ColoredCubicGraph graph() const {
    const Json& g = need("graph");
    if (g.is_string()) {
      auto builtin = builtin_graph(g.get<std::string>());
      if (!builtin) throw UsageError("unknown builtin graph '" + g.get<std::string>() + "'");
      return *builtin;
    }
    if (g.is_object() && g.contains("text") && g["text"].is_string()) return parse_graph(g["text"].get<std::string>());
    throw UsageError("graph must be a builtin name or {\"text\": <edge list>}");
  }

  SlopeSystem slopes() const { return parse_slopes(get<std::string>("slopes", "standard")); }

  ModuliOptions moduli_options(bool chambers) const {
    ModuliOptions o;
    o.bound = get<int>("w", 1);
    if (o.bound < 0 || o.bound > 3) throw UsageError("w must be in [0, 3]");
    o.sampling.seed = get<std::uint64_t>("seed", 0);
    o.sampling.budget_per_wall = get<std::size_t>("budget", 64);
    o.chambers.dimension_cap = get<std::size_t>("cap", 3);
    o.chambers.best_effort = get<bool>("best_effort", false);
    o.compute_chambers = chambers;
    return o;
  }

  ModuliReport moduli(bool chambers) const { return full_moduli(graph(), slopes(), moduli_options(chambers)); }

  // Nonempty component selected by "component" (position in the report).
  const ComponentSummary& component(const ModuliReport& r) const {
    const auto idx = get<std::size_t>("component", 0);
    if (r.components.empty()) throw DomainError("empty_moduli", "the moduli space is empty within the winding bound");
    if (idx >= r.components.size())
      throw UsageError("component " + std::to_string(idx) + " out of range (" + std::to_string(r.components.size()) +
                       " components)");
    return r.components[idx];
  }

  Json selection(const ModuliReport& r) const {
    const auto idx = get<std::size_t>("component", 0);
    return {{"graph", json::graph(r.graph)}, {"slopes", json::slopes(r.slopes)}, {"winding_bound", r.options.bound},
            {"component", idx}, {"index", r.components.at(idx).index},
            {"rho", json::winding(r.components.at(idx).component.rho)}};
  }
};

Json cycles_json(const ColoredCubicGraph& g) {
  Json out = Json::object();
  for (const auto& p : kColorPairs) out[pair_name(p)] = bicolored_cycles(g, p);
  return out;
}

Json graphs(const Context&) {
  Json list = Json::array();
  for (const auto& name : builtin_graph_names()) {
    const auto g = *builtin_graph(name);
    list.push_back({{"name", name},
                    {"description", builtin_description(name)},
                    {"bridge_number", g.bridge_number()},
                    {"bipartite", bipartition(g).bipartite()},
                    {"surface", json::surface(surface_type(g))}});
  }
  return json::document("graphs", {{"graphs", list}});
}

Json validate(const Context& c) {
  const auto g = c.graph();
  return json::document("validate", {{"valid", true},
                                     {"graph", json::graph(g)},
                                     {"bipartition", json::bipartition(bipartition(g))},
                                     {"bicolored_cycles", cycles_json(g)}});
}

Json surface(const Context& c) {
  const auto g = c.graph();
  return json::document("surface", {{"surface", json::surface(surface_type(g))},
                                    {"bipartition", json::bipartition(bipartition(g))},
                                    {"bicolored_cycles", cycles_json(g)}});
}

Json colorings(const Context& c) {
  const auto g = c.graph();
  CubicMultigraph u;
  u.vertex_count = g.vertex_count();
  for (const Edge& e : g.edges()) u.edges.emplace_back(e.tail, e.head);
  const ColoringSearch s = enumerate_tait_colorings(u);
  Json classes = Json::array();
  for (const auto& h : s.classes) classes.push_back(json::graph(h));
  return json::document("colorings", {{"raw_count", s.raw_count},
                                      {"classes_up_to_color_permutation", s.classes.size()},
                                      {"classes", classes}});
}

Json moduli(const Context& c) { return json::document("moduli", json::moduli_report(c.moduli(true))); }

Json sample(const Context& c) {
  const auto r = c.moduli(false);
  Json body = c.selection(r);
  body["sample"] = json::sample(c.component(r).sample);
  return json::document("sample", body);
}

Json chambers(const Context& c) {
  const auto r = c.moduli(false);
  const auto& comp = c.component(r).component;
  ChamberOptions opts = c.moduli_options(true).chambers;
  Json body = c.selection(r);
  body["families"] = json::families(comp.families);
  body["walls"] = json::walls(degeneracy_walls(comp));
  body["chambers"] = json::chambers(enumerate_chambers(comp, opts));
  return json::document("chambers", body);
}

Json moves(const Context& c) {
  const auto r = c.moduli(false);
  const auto& comp = c.component(r).component;
  const ChamberSet set = enumerate_chambers(comp, c.moduli_options(true).chambers);
  const auto adjacency = chamber_adjacency(comp, set);
  Json body = c.selection(r);
  body["chamber_count"] = set.chambers.size();
  body["moves"] = json::moves(adjacency);
  body["common_locus"] = json::locus(common_locus(comp, set));
  return json::document("moves", body);
}

Json realize_point(const Context& c) {
  const auto r = c.moduli(false);
  const auto& comp = c.component(r).component;
  const RatVector t = json::parse_rationals(c.need("t"));
  if (t.size() != comp.dim())
    throw UsageError("expected " + std::to_string(comp.dim()) + " parameters, got " + std::to_string(t.size()));
  const GeometricDiagram d = realize(comp, t);
  Json body = c.selection(r);
  body["diagram"] = json::geometric(d);
  if (d.slopes.is_standard()) body["combinatorial"] = json::combinatorial(snap(d));
  if (comp.dim() <= c.moduli_options(true).chambers.dimension_cap) {
    const ChamberSet set = enumerate_chambers(comp);
    IntVector floors;
    for (const auto& f : comp.families) floors.push_back(floor(f.value(t)));
    const auto id = set.find(floors);
    body["chamber"] = id ? Json(*id) : Json(nullptr);
  }
  return json::document("realize", body);
}

std::string diagram_text(const Context& c) {
  const auto g = c.graph();
  const SlopeSystem s = c.slopes();
  const std::string format = c.get<std::string>("format", "svg");
  if (c.req.contains("points")) {
    std::vector<Point> pts;
    for (const auto& p : c.need("points")) {
      const RatVector xy = json::parse_rationals(p);
      if (xy.size() != 2) throw UsageError("each point needs two coordinates");
      pts.push_back({xy[0], xy[1]});
    }
    return render(make_diagram(g, s, std::move(pts)), format);
  }
  // Otherwise a chart point of a component, or a chamber witness.
  const auto r = full_moduli(g, s, c.moduli_options(false));
  const auto& comp = c.component(r).component;
  RatVector t;
  if (c.req.contains("t")) {
    t = json::parse_rationals(c.req["t"]);
  } else {
    const ChamberSet set = enumerate_chambers(comp, c.moduli_options(true).chambers);
    const auto id = c.get<std::size_t>("chamber", 0);
    if (id >= set.chambers.size()) throw UsageError("chamber " + std::to_string(id) + " out of range");
    t = set.chambers[id].witness;
  }
  const GeometricDiagram d = realize(comp, t);
  if (c.get<bool>("snap", false)) return render(snap(d), format);
  return render(d, format);
}

Json search(const Context& c) {
  const auto b = c.get<std::size_t>("bridge", 2);
  const bool only_bipartite = c.get<bool>("bipartite", false);
  const std::string surface_filter = c.get<std::string>("surface", "");
  const bool analyze = c.get<bool>("moduli", true);
  ModuliOptions opts = c.moduli_options(true);
  Json list = Json::array();
  for (const auto& g : all_tait_graphs(b)) {
    const SurfaceType st = surface_type(g);
    const bool bip = bipartition(g).bipartite();
    if (only_bipartite && !bip) continue;
    if (!surface_filter.empty() && st.name() != surface_filter) continue;
    Json entry = {{"graph", json::graph(g)}, {"text", format_graph(g)}, {"bipartite", bip},
                  {"surface", json::surface(st)}, {"embeddable", lagrangian_embeddable(st)}};
    if (analyze) {
      const ModuliReport r = full_moduli(g, SlopeSystem::standard(), opts);
      entry["based_dimension"] = r.based_dimension;
      entry["components"] = r.components.size();
      Json counts = Json::array();
      for (const auto& comp : r.components) {
        if (comp.chambers) counts.push_back(comp.chambers->chambers.size());
        else counts.push_back(nullptr);
      }
      entry["chamber_counts"] = counts;
    }
    list.push_back(entry);
  }
  return json::document("search", {{"bridge_number", b}, {"count", list.size()}, {"graphs", list}});
}

Json crosscheck(const Context& c) {
  CrossCheckOptions opts;
  opts.enumeration.dedup_translations = c.get<bool>("dedup", true);
  opts.moduli = c.moduli_options(true);
  const auto n = c.get<std::size_t>("n", 3);
  return json::document("crosscheck", json::enumeration(cross_check(n, opts.moduli.bound, opts)));
}

Json markov(const Context& c) {
  const auto bound = c.get<std::int64_t>("bound", 100);
  Json body = {{"bound", bound}, {"triples", json::markov(enumerate_markov(bound))}};
  if (c.req.contains("triple")) {
    const auto t = c.req["triple"].get<std::array<std::int64_t, 3>>();
    const auto alpha = c.need("alpha").get<IntPair>();
    const auto beta = c.need("beta").get<IntPair>();
    const SlopeTriple st = solve_slope_triple({t[0], t[1], t[2]}, alpha, beta);
    body["gamma"] = {st.gamma[0], st.gamma[1]};
    body["slopes"] = json::slopes(st.system);
  }
  return json::document("markov", body);
}

Json obstruct(const Context& c) { return json::document("obstruct", json::obstruction(obstruction_report(c.graph()))); }

using JsonHandler = std::function<Json(const Context&)>;

const std::map<std::string, JsonHandler>& handlers() {
  static const std::map<std::string, JsonHandler> table = {
      {"graphs", graphs},     {"validate", validate},   {"surface", surface},
      {"colorings", colorings}, {"moduli", moduli},     {"sample", sample},
      {"chambers", chambers}, {"moves", moves},         {"realize", realize_point},
      {"search", search},     {"crosscheck", crosscheck}, {"markov", markov},
      {"obstruct", obstruct}};
  return table;
}

Response error(Outcome o, const std::string& code, const std::string& message, Json details = Json::object()) {
  return {o, json::dump(json::error_document(code, message, std::move(details)))};
}

}  // namespace

Response handle(const std::string& endpoint, const Json& request) {
  try {
    if (!request.is_object()) throw UsageError("request body must be a JSON object");
    const Context ctx{request};
    if (endpoint == "diagram") {
      const std::string format = ctx.get<std::string>("format", "svg");
      return {Outcome::kOk, diagram_text(ctx), format == "svg" ? "image/svg+xml" : "text/plain"};
    }
    const auto it = handlers().find(endpoint);
    if (it == handlers().end()) throw UsageError("unknown command '" + endpoint + "'");
    return {Outcome::kOk, json::dump(it->second(ctx))};
  } catch (const ValidationError& e) {
    return error(Outcome::kDomainError, e.code(), e.what(), {{"problems", e.problems()}});
  } catch (const ParseError& e) {
    return error(Outcome::kUsageError, e.code(), e.what());
  } catch (const UsageError& e) {
    return error(Outcome::kUsageError, e.code(), e.what());
  } catch (const DomainError& e) {
    return error(Outcome::kDomainError, e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return error(Outcome::kUsageError, "usage_error", e.what());
  } catch (const std::exception& e) {
    return error(Outcome::kInternalError, "internal", e.what());
  }
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::kOk: return 0;
    case Outcome::kUsageError: return 2;
    default: return 1;
  }
}

int http_status(Outcome o) {
  switch (o) {
    case Outcome::kOk: return 200;
    case Outcome::kUsageError: return 400;
    case Outcome::kDomainError: return 422;
    default: return 500;
  }
}

}  // namespace trigrid::api
