#include "trigrid/serialize.hpp"

#include "trigrid/error.hpp"

namespace trigrid::json {

namespace {

Json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return trigrid::to_string(z);
}

Json pair(VertexId a, VertexId b) { return Json::array({a, b}); }

Json point(const Point& p) { return Json::array({rational(p[0]), rational(p[1])}); }

}  // namespace

Json document(const std::string& kind, Json body) {
  Json out = {{"schema_version", kSchemaVersion}, {"kind", kind}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

Json error_document(const std::string& code, const std::string& message, Json details) {
  Json err = {{"code", code}, {"message", message}};
  if (!details.empty()) err["details"] = std::move(details);
  return document("error", {{"error", err}});
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational(const Rational& q) { return trigrid::to_string(q); }

Json rationals(const RatVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational(q));
  return out;
}

Json integers(const IntVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(integer(z));
  return out;
}

RatVector parse_rationals(const Json& j) {
  if (!j.is_array()) throw ParseError(0, "expected an array of rationals");
  RatVector out;
  for (const auto& e : j) {
    if (e.is_string()) out.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number_integer()) out.push_back(Rational(static_cast<long>(e.get<std::int64_t>())));
    else throw ParseError(0, "rationals must be \"p/q\" strings");
  }
  return out;
}

Json graph(const ColoredCubicGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({{"tail", e.tail}, {"head", e.head}, {"color", color_name(e.color)}});
  Json parallel = Json::array();
  for (const auto& [a, b] : g.parallel_pairs()) parallel.push_back(pair(a, b));
  return {{"vertex_count", g.vertex_count()},
          {"bridge_number", g.bridge_number()},
          {"edges", edges},
          {"parallel_pairs", parallel}};
}

Json surface(const SurfaceType& s) {
  return {{"orientable", s.orientable}, {"euler_characteristic", s.euler_characteristic}, {"normal_form", s.name()}};
}

Json bipartition(const Bipartition& b) {
  if (b.bipartite()) {
    Json labels = Json::array();
    for (Side s : *b.sides) labels.push_back(s == Side::kX ? "X" : "O");
    return {{"bipartite", true}, {"labels", labels}};
  }
  return {{"bipartite", false}, {"odd_cycle", b.odd_cycle}};
}

Json slopes(const SlopeSystem& s) {
  Json normals = Json::object();
  for (Color c : kColors) normals[std::string(color_name(c))] = {s.normal(c)[0], s.normal(c)[1]};
  return {{"label", s.label()}, {"normals", normals}};
}

Json winding(const WindingClass& w) { return integers(w.rho); }

Json chart(const AffineChart& c) {
  Json basis = Json::array();
  for (const auto& b : c.basis) basis.push_back(integers(b));
  return {{"ambient_dim", c.ambient_dim},
          {"dim", c.dim()},
          {"origin", rationals(c.origin)},
          {"basis", basis},
          {"periodicity", "integer lattice of the basis"}};
}

Json certificate(const DegeneracyCertificate& c) {
  if (c.coincident) return {{"kind", "coincident"}, {"pair", pair(c.i, c.k)}};
  return {{"kind", "integral_functional"},
          {"color", color_name(c.color)},
          {"pair", pair(c.i, c.k)},
          {"value", rational(c.value)}};
}

Json families(const std::vector<WallFamily>& f) {
  Json out = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    Json members = Json::array();
    for (const auto& m : f[i].members) members.push_back({{"color", color_name(m.color)}, {"pair", pair(m.i, m.k)}});
    out.push_back({{"id", i}, {"gradient", integers(f[i].gradient)}, {"constant", rational(f[i].constant)},
                   {"members", members}});
  }
  return out;
}

Json walls(const std::vector<DegeneracyWall>& w) {
  Json out = Json::array();
  for (const auto& x : w)
    out.push_back({{"family", x.family},
                   {"color", color_name(x.color)},
                   {"pair", pair(x.i, x.k)},
                   {"gradient", integers(x.gradient)},
                   {"constant", rational(x.constant)},
                   {"offset", integer(x.offset)}});
  return out;
}

Json component(const ModuliComponent& c, std::size_t index) {
  Json certs = Json::array();
  for (const auto& d : c.degeneracies) certs.push_back(certificate(d));
  return {{"index", index},
          {"rho", winding(c.rho)},
          {"dim", c.dim()},
          {"chart", chart(c.chart)},
          {"fully_degenerate", c.fully_degenerate()},
          {"certificates", certs},
          {"families", families(c.families)},
          {"walls", walls(degeneracy_walls(c))}};
}

Json combinatorial_type(const CombinatorialType& t) {
  Json out = Json::object();
  for (Color c : kColors) {
    Json word = Json::array();
    for (const auto& [a, b] : t.words[index_of(c)]) word.push_back(pair(a, b));
    out[std::string(color_name(c))] = word;
  }
  return out;
}

Json sample(const SampleResult& s) {
  Json out = {{"found", s.sample.has_value()}, {"attempts", s.attempts}};
  if (s.sample) out["diagram"] = geometric(s.sample->diagram);
  if (!s.certificates.empty()) {
    Json certs = Json::array();
    for (const auto& c : s.certificates) certs.push_back(certificate(c));
    out["certificates"] = certs;
  }
  return out;
}

Json chambers(const ChamberSet& set) {
  Json list = Json::array();
  for (const auto& ch : set.chambers)
    list.push_back({{"id", ch.id},
                    {"floors", integers(ch.floors)},
                    {"witness", rationals(ch.witness)},
                    {"signs", ch.signs},
                    {"type", combinatorial_type(ch.type)},
                    {"cells", ch.cells}});
  Json lattice = Json::array();
  for (const auto& v : set.lattice) lattice.push_back(integers(v));
  return {{"count", set.chambers.size()}, {"cells", set.cells}, {"floor_lattice", lattice}, {"chambers", list}};
}

Json moves(const std::vector<Move>& m) {
  Json out = Json::array();
  for (const auto& x : m)
    out.push_back({{"from", x.from},
                   {"to", x.to},
                   {"family", x.family},
                   {"level", integer(x.level)},
                   {"coincident_families", x.also},
                   {"witness", rationals(x.witness)},
                   {"walls_through", x.walls_through}});
  return out;
}

Json locus(const std::optional<CommonLocus>& l) {
  if (!l) return nullptr;
  return {{"families", {l->first, l->second}},
          {"levels", {integer(l->first_level), integer(l->second_level)}},
          {"point", rationals(l->point)},
          {"through", l->through},
          {"touched", l->touched}};
}

Json projections(const std::array<GridProjection, 3>& p) {
  Json out = Json::array();
  static const std::array<const char*, 3> kNames = {"xy", "yz", "zx"};
  for (std::size_t i = 0; i < 3; ++i) {
    Json classes = Json::array(), pairs = Json::array();
    for (const auto& c : p[i].classes) classes.push_back({c[0], c[1]});
    for (std::size_t side = 0; side < 2; ++side) {
      Json side_pairs = Json::array();
      for (const auto& [a, b] : p[i].pairing[side]) side_pairs.push_back(pair(a, b));
      pairs.push_back(side_pairs);
    }
    const LinkComponents links = link_components(p[i]);
    out.push_back({{"projection", kNames[i]},
                   {"colors", {color_name(p[i].colors.first), color_name(p[i].colors.second)}},
                   {"size", p[i].size},
                   {"classes", classes},
                   {"pairing", pairs},
                   {"link_components", links.count()},
                   {"cycles", links.cycles}});
  }
  return out;
}

Json geometric(const GeometricDiagram& d) {
  Json pts = Json::array();
  for (const auto& p : d.points) pts.push_back(point(p));
  Json out = {{"points", pts}, {"slopes", d.slopes.label()}};
  if (d.rho) out["rho"] = winding(*d.rho);
  if (d.parameters) out["parameters"] = rationals(*d.parameters);
  out["type"] = combinatorial_type(trigrid::combinatorial_type(d));
  out["projections"] = projections(grid_projections(d));
  const auto marks = mark_orientation(d);
  if (marks) {
    Json labels = Json::array();
    for (Side s : *marks) labels.push_back(s == Side::kX ? "X" : "O");
    out["orientation"] = labels;
  } else {
    out["orientation"] = nullptr;
  }
  return out;
}

Json combinatorial(const CombinatorialDiagram& d) {
  Json cells = Json::array();
  for (const Cell& c : d.cells)
    cells.push_back({{"col", c.col}, {"row", c.row}, {"triangle", c.triangle == Triangle::kLower ? "lower" : "upper"}});
  return {{"n", d.n}, {"cells", cells}};
}

Json moduli_report(const ModuliReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json entry = component(c.component, c.index);
    entry["sample"] = sample(c.sample);
    if (c.chambers) entry["chambers"] = chambers(*c.chambers);
    entry["notes"] = c.notes;
    comps.push_back(entry);
  }
  Json dropped = Json::array();
  for (const auto& d : r.dropped) {
    Json certs = Json::array();
    for (const auto& c : d.certificates) certs.push_back(certificate(c));
    dropped.push_back({{"index", d.index}, {"rho", winding(d.rho)}, {"certificates", certs}});
  }
  const bool empty = r.empty();
  return {{"graph", graph(r.graph)},
          {"slopes", slopes(r.slopes)},
          {"winding_bound", r.options.bound},
          {"winding_classes",
           {{"examined", r.search.candidates},
            {"found", r.search.classes.size()},
            {"total", integer(r.search.class_count)},
            {"complete", r.search.complete}}},
          {"based_dimension", r.based_dimension},
          {"dimension", empty ? Json(nullptr) : Json(r.dimension())},
          {"linear_dimension", r.dimension()},
          {"note", empty ? "empty" : "nonempty"},
          {"components", comps},
          {"dropped", dropped}};
}

Json enumeration(const EnumerationReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json entry = {{"diagram", combinatorial(e.diagram)}, {"bridge_number", e.bridge_number},
                  {"realizable", e.realizable}, {"verdict", verdict_name(e.verdict)}};
    if (e.graph) entry["graph"] = graph(*e.graph);
    if (e.component) entry["component"] = *e.component;
    if (e.chamber) entry["chamber"] = *e.chamber;
    entries.push_back(entry);
  }
  Json counts = Json::object();
  for (Verdict v : {Verdict::kMatchedChamber, Verdict::kEmptyModuliFlagged, Verdict::kUnrealizable,
                    Verdict::kDisconnectedSkipped, Verdict::kMismatch})
    counts[verdict_name(v)] = r.count(v);
  return {{"n", r.n},       {"winding_bound", r.bound}, {"dedup_translations", r.dedup_translations},
          {"diagrams", r.entries.size()}, {"graphs", r.graphs}, {"verdicts", counts},
          {"entries", entries}};
}

Json obstruction(const ObstructionReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditionals)
    conds.push_back({{"fillable", {pair_name(c.fillable[0]), pair_name(c.fillable[1])}},
                     {"obstructed", pair_name(c.obstructed)},
                     {"statement", c.statement}});
  Json links = Json::object();
  for (std::size_t i = 0; i < 3; ++i) links[pair_name(kColorPairs[i])] = r.link_components[i];
  return {{"surface", surface(r.surface)},  {"embeddable", r.embeddable}, {"link_components", links},
          {"hypothesis", r.hypothesis},     {"conditionals", conds},      {"summary", r.summary}};
}

Json markov(const std::vector<MarkovTriple>& triples) {
  Json out = Json::array();
  for (const auto& t : triples) out.push_back({t.a, t.b, t.c});
  return out;
}

}  // namespace trigrid::json
