#include "trigrid/oracle.hpp"

#include <algorithm>
#include <set>

#include "trigrid/error.hpp"
#include "trigrid/lp.hpp"

namespace trigrid {

namespace {

struct Slot {
  std::size_t col, row;
  Triangle tri;
  std::size_t diag;
};

std::vector<std::size_t> encode(const CombinatorialDiagram& d) {
  std::vector<std::size_t> code;
  for (const Cell& c : d.cells) code.push_back((c.col * d.n + c.row) * 2 + (c.triangle == Triangle::kUpper ? 1 : 0));
  std::sort(code.begin(), code.end());
  return code;
}

CombinatorialDiagram decode(const std::vector<std::size_t>& code, std::size_t n) {
  CombinatorialDiagram d;
  d.n = n;
  for (std::size_t s : code) d.cells.push_back({s / 2 / n, (s / 2) % n, s % 2 ? Triangle::kUpper : Triangle::kLower});
  return d;
}

std::vector<std::size_t> translated(const std::vector<std::size_t>& code, std::size_t n, std::size_t dc,
                                    std::size_t dr) {
  std::vector<std::size_t> out;
  for (std::size_t s : code) {
    const std::size_t col = (s / 2 / n + dc) % n, row = ((s / 2) % n + dr) % n;
    out.push_back((col * n + row) * 2 + s % 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

class Search {
 public:
  Search(std::size_t n, SlotOrder order) : n_(n) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (Triangle t : {Triangle::kLower, Triangle::kUpper}) {
          const std::size_t col = order == SlotOrder::kColumnMajor ? a : b;
          const std::size_t row = order == SlotOrder::kColumnMajor ? b : a;
          slots_.push_back({col, row, t, (col + row + (t == Triangle::kUpper ? 1 : 0)) % n});
        }
    for (auto& line : remaining_) line.assign(n, 0);
    for (auto& line : count_) line.assign(n, 0);
    for (const Slot& s : slots_) bump(remaining_, s, 1);
  }

  std::vector<std::vector<std::size_t>> run() {
    visit(0);
    return std::move(found_);
  }

 private:
  using Lines = std::array<std::vector<int>, 3>;

  static void bump(Lines& lines, const Slot& s, int by) {
    lines[0][s.col] += by;
    lines[1][s.row] += by;
    lines[2][s.diag] += by;
  }

  // A line is dead when it holds one point and no slot is left to pair it, or
  // already holds more than two.
  bool dead(const Slot& s) const {
    const std::array<std::size_t, 3> idx = {s.col, s.row, s.diag};
    for (std::size_t k = 0; k < 3; ++k) {
      const int c = count_[k][idx[k]];
      if (c > 2 || (c == 1 && remaining_[k][idx[k]] == 0)) return true;
    }
    return false;
  }

  void visit(std::size_t i) {
    if (i == slots_.size()) {
      if (!chosen_.empty()) {
        CombinatorialDiagram d;
        d.n = n_;
        for (std::size_t k : chosen_) d.cells.push_back({slots_[k].col, slots_[k].row, slots_[k].tri});
        found_.push_back(encode(d));
      }
      return;
    }
    const Slot& s = slots_[i];
    bump(remaining_, s, -1);
    if (!dead(s)) visit(i + 1);
    bump(count_, s, 1);
    chosen_.push_back(i);
    if (!dead(s)) visit(i + 1);
    chosen_.pop_back();
    bump(count_, s, -1);
    bump(remaining_, s, 1);
  }

  std::size_t n_;
  std::vector<Slot> slots_;
  Lines remaining_, count_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<CombinatorialDiagram> enumerate_combinatorial(std::size_t n, const EnumerationOptions& options) {
  if (n == 0) throw UsageError("grid size must be >= 1");
  if (n > options.max_n)
    throw UsageError("grid size " + std::to_string(n) + " exceeds the enumeration bound " +
                     std::to_string(options.max_n));
  auto codes = Search(n, options.order).run();
  std::set<std::vector<std::size_t>> kept;
  for (auto& code : codes) {
    if (options.dedup_translations) {
      std::vector<std::size_t> best = code;
      for (std::size_t dc = 0; dc < n; ++dc)
        for (std::size_t dr = 0; dr < n; ++dr) best = std::min(best, translated(code, n, dc, dr));
      kept.insert(std::move(best));
    } else {
      kept.insert(std::move(code));
    }
  }
  std::vector<CombinatorialDiagram> out;
  for (const auto& code : kept) out.push_back(decode(code, n));
  return out;
}

ColoredCubicGraph graph_of(const CombinatorialDiagram& d) {
  if (auto problem = check_combinatorial(d)) throw DomainError("invalid_diagram", *problem);
  std::vector<Edge> edges;
  for (Color c : kColors) {
    std::vector<std::vector<VertexId>> lines(d.n);
    for (VertexId v = 0; v < d.cells.size(); ++v) lines[d.level(c, v)].push_back(v);
    for (const auto& line : lines)
      if (line.size() == 2) edges.push_back({line[0], line[1], c});
  }
  return ColoredCubicGraph(d.cells.size(), std::move(edges));
}

Realization realize_combinatorial(const CombinatorialDiagram& d) {
  const std::size_t n = d.n;
  // Variables: X_0..X_{n-1}, Y_0..Y_{n-1}, slack.
  const std::size_t vars = 2 * n + 1, s = 2 * n;
  lp::Problem p(vars);
  auto row = [&] { return RatVector(vars, Rational(0)); };
  const Rational unit(1, static_cast<unsigned long>(n));
  auto strip = [&](RatVector coeffs, const Rational& lo) {
    RatVector lower = coeffs, upper = coeffs;
    lower[s] = -1;
    upper[s] = 1;
    p.add(lower, lp::Relation::kGreaterEqual, lo);
    p.add(upper, lp::Relation::kLessEqual, lo + unit);
  };
  std::set<std::size_t> cols, rows;
  for (const Cell& c : d.cells) {
    cols.insert(c.col);
    rows.insert(c.row);
  }
  for (std::size_t c : cols) {
    RatVector r = row();
    r[c] = 1;
    strip(r, unit * static_cast<unsigned long>(c));
  }
  for (std::size_t rr : rows) {
    RatVector r = row();
    r[n + rr] = 1;
    strip(r, unit * static_cast<unsigned long>(rr));
  }
  auto unreduced_diag = [&](const Cell& c) { return c.col + c.row + (c.triangle == Triangle::kUpper ? 1 : 0); };
  for (const Cell& c : d.cells) {
    RatVector r = row();
    r[c.col] = 1;
    r[n + c.row] = 1;
    strip(r, unit * static_cast<unsigned long>(unreduced_diag(c)));
  }
  for (VertexId u = 0; u < d.cells.size(); ++u) {
    for (VertexId v = u + 1; v < d.cells.size(); ++v) {
      if (d.diagonal(u) != d.diagonal(v)) continue;
      const Cell &a = d.cells[u], &b = d.cells[v];
      RatVector r = row();
      r[a.col] += 1;
      r[n + a.row] += 1;
      r[b.col] -= 1;
      r[n + b.row] -= 1;
      const long shift = static_cast<long>(unreduced_diag(a)) - static_cast<long>(unreduced_diag(b));
      p.add(r, lp::Relation::kEqual, Rational(shift) * unit);
    }
  }
  RatVector cap = row();
  cap[s] = 1;
  p.add(cap, lp::Relation::kLessEqual, unit);
  p.objective = cap;
  const lp::Result res = lp::maximize(p);
  Realization out;
  if (res.status != lp::Status::kOptimal || res.value <= 0) return out;
  out.realizable = true;
  for (const Cell& c : d.cells) out.points.push_back({res.x[c.col], res.x[n + c.row]});
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kMatchedChamber: return "matched-chamber";
    case Verdict::kEmptyModuliFlagged: return "empty-moduli-flagged";
    case Verdict::kUnrealizable: return "unrealizable";
    case Verdict::kDisconnectedSkipped: return "disconnected-skipped";
    default: return "mismatch";
  }
}

std::size_t EnumerationReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [v](const DiagramCheck& e) { return e.verdict == v; }));
}

EnumerationReport cross_check(std::size_t n, int bound, const CrossCheckOptions& options) {
  EnumerationReport report;
  report.n = n;
  report.bound = bound;
  report.dedup_translations = options.enumeration.dedup_translations;
  ModuliOptions mopts = options.moduli;
  mopts.bound = bound;
  std::map<std::string, ModuliReport> cache;

  for (auto& d : enumerate_combinatorial(n, options.enumeration)) {
    DiagramCheck check;
    check.bridge_number = d.cells.size() / 2;
    check.realizable = realize_combinatorial(d).realizable;
    std::optional<ColoredCubicGraph> g;
    try {
      g = graph_of(d);
    } catch (const ValidationError&) {
      check.verdict = Verdict::kDisconnectedSkipped;
      check.diagram = std::move(d);
      report.entries.push_back(std::move(check));
      continue;
    }
    const CanonicalForm cf = canonical_form(*g);
    const std::string key = format_graph(cf.graph);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, full_moduli(cf.graph, SlopeSystem::standard(), mopts)).first;
    const ModuliReport& moduli = it->second;
    check.graph = cf.graph;

    const CombinatorialType type = relabeled(combinatorial_type(d), cf.relabel);
    for (std::size_t ci = 0; ci < moduli.components.size() && !check.chamber; ++ci) {
      const auto& chambers = moduli.components[ci].chambers;
      if (!chambers) continue;
      for (const auto& ch : chambers->chambers) {
        if (ch.type == type) {
          check.component = ci;
          check.chamber = ch.id;
          break;
        }
      }
    }
    if (check.chamber)
      check.verdict = Verdict::kMatchedChamber;
    else if (moduli.empty())
      check.verdict = check.realizable ? Verdict::kMismatch : Verdict::kEmptyModuliFlagged;
    else
      check.verdict = check.realizable ? Verdict::kMismatch : Verdict::kUnrealizable;
    check.diagram = std::move(d);
    report.entries.push_back(std::move(check));
  }
  report.graphs = cache.size();
  return report;
}

}  // namespace trigrid
