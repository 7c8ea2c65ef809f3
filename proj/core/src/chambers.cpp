#include "trigrid/chambers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "trigrid/error.hpp"
#include "trigrid/lp.hpp"

namespace trigrid {

namespace {

// LP over chart parameters t, optionally with a trailing slack variable s.
class Builder {
 public:
  Builder(std::size_t dim, bool slack) : dim_(dim), slack_(slack), problem_(dim + (slack ? 1 : 0)) {
    if (slack_) {
      RatVector row = blank();
      row[dim_] = 1;
      problem_.add(row, lp::Relation::kLessEqual, 1);
      problem_.objective = row;
    }
  }

  // 0 < t_j < 1 (closed without slack).
  void box() {
    for (std::size_t j = 0; j < dim_; ++j) {
      RatVector lo = blank(), hi = blank();
      lo[j] = 1;
      hi[j] = 1;
      if (slack_) {
        lo[dim_] = -1;
        hi[dim_] = 1;
      }
      problem_.add(lo, lp::Relation::kGreaterEqual, 0);
      problem_.add(hi, lp::Relation::kLessEqual, 1);
    }
  }

  // k < f < k + 1, strict by the slack when `strict`.
  void slab(const WallFamily& f, const Integer& k, bool strict) {
    RatVector lo = gradient(f), hi = gradient(f);
    if (strict && slack_) {
      lo[dim_] = -1;
      hi[dim_] = 1;
    }
    problem_.add(lo, lp::Relation::kGreaterEqual, Rational(k) - f.constant);
    problem_.add(hi, lp::Relation::kLessEqual, Rational(k + 1) - f.constant);
  }

  void level(const WallFamily& f, const Integer& value) {
    problem_.add(gradient(f), lp::Relation::kEqual, Rational(value) - f.constant);
  }

  void objective(const WallFamily& f, int sign) {
    problem_.objective = gradient(f);
    for (auto& q : problem_.objective) q *= sign;
  }

  lp::Result solve() const { return lp::maximize(problem_); }

  // Interior point when the slack optimum is positive.
  std::optional<RatVector> interior() const {
    const lp::Result r = solve();
    if (r.status != lp::Status::kOptimal || r.value <= 0) return std::nullopt;
    return RatVector(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(dim_));
  }

 private:
  RatVector blank() const { return RatVector(problem_.num_vars, Rational(0)); }
  RatVector gradient(const WallFamily& f) const {
    RatVector row = blank();
    for (std::size_t j = 0; j < dim_; ++j) row[j] = f.gradient[j];
    return row;
  }

  std::size_t dim_;
  bool slack_;
  lp::Problem problem_;
};

IntVector floors_at(const std::vector<WallFamily>& families, const RatVector& t) {
  IntVector k;
  for (const auto& f : families) k.push_back(floor(f.value(t)));
  return k;
}

std::vector<IntVector> floor_lattice(const std::vector<WallFamily>& families, std::size_t dim) {
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < dim; ++j) {
    IntVector g;
    for (const auto& f : families) g.push_back(f.gradient[j]);
    gens.push_back(std::move(g));
  }
  return linalg::hermite_basis(std::move(gens), families.size());
}

// Ratio lambda with u = lambda w, if the gradients are parallel.
std::optional<Rational> parallel_ratio(const IntVector& u, const IntVector& w) {
  std::size_t j = 0;
  while (w[j] == 0) ++j;
  const Rational lambda(u[j], w[j]);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (Rational(u[i]) != lambda * w[i]) return std::nullopt;
  return lambda;
}

RatVector reduced(RatVector t) {
  for (auto& x : t) x = frac(x);
  return t;
}

std::vector<int> wall_signs(const ModuliComponent& c, const RatVector& t) {
  std::vector<int> signs;
  for (const auto& w : degeneracy_walls(c)) signs.push_back(c.families[w.family].value(t) > Rational(w.offset) ? 1 : -1);
  return signs;
}

}  // namespace

std::optional<std::size_t> ChamberSet::find(const IntVector& floors) const {
  const IntVector key = linalg::reduce_modulo(floors, lattice);
  for (const auto& ch : chambers)
    if (linalg::reduce_modulo(ch.floors, lattice) == key) return ch.id;
  return std::nullopt;
}

ChamberSet enumerate_chambers(const ModuliComponent& c, const ChamberOptions& options) {
  if (c.fully_degenerate()) return {};
  const std::size_t dim = c.dim();
  if (dim > options.dimension_cap && !options.best_effort)
    throw DomainError("dimension_too_large", "chart dimension " + std::to_string(dim) + " exceeds the cap " +
                                                 std::to_string(options.dimension_cap));
  ChamberSet set;
  set.lattice = floor_lattice(c.families, dim);
  const auto& fams = c.families;
  std::map<IntVector, std::size_t> by_key;

  IntVector k(fams.size());
  auto record = [&](const RatVector& witness) {
    ++set.cells;
    const IntVector floors = floors_at(fams, witness);
    const IntVector key = linalg::reduce_modulo(floors, set.lattice);
    auto [it, fresh] = by_key.emplace(key, set.chambers.size());
    if (fresh) {
      Chamber ch;
      ch.id = set.chambers.size();
      ch.floors = floors;
      ch.witness = witness;
      ch.signs = wall_signs(c, witness);
      ch.type = combinatorial_type(realize(c, witness));
      set.chambers.push_back(std::move(ch));
    }
    ++set.chambers[it->second].cells;
  };

  auto region = [&](std::size_t fixed, bool slack) {
    Builder b(dim, slack);
    b.box();
    for (std::size_t u = 0; u < fixed; ++u) b.slab(fams[u], k[u], true);
    return b;
  };

  // Splits the current cell along family w, depth first.
  auto split = [&](auto&& self, std::size_t w, const RatVector& inside) -> void {
    if (w == fams.size()) {
      record(inside);
      return;
    }
    Builder hi = region(w, false), lo = region(w, false);
    hi.objective(fams[w], 1);
    lo.objective(fams[w], -1);
    const Rational top = hi.solve().value + fams[w].constant;
    const Rational bottom = -lo.solve().value + fams[w].constant;
    for (Integer level = floor(bottom); level < ceil(top); ++level) {
      k[w] = level;
      Builder cell = region(w + 1, true);
      if (auto point = cell.interior()) self(self, w + 1, *point);
    }
  };

  if (dim == 0) {
    record({});
  } else {
    Builder b(dim, true);
    b.box();
    if (auto point = b.interior()) split(split, 0, *point);
  }
  return set;
}

std::vector<Move> chamber_adjacency(const ModuliComponent& c, const ChamberSet& set) {
  std::vector<Move> moves;
  const auto& fams = c.families;
  const std::size_t dim = c.dim();
  for (const auto& ch : set.chambers) {
    for (std::size_t w = 0; w < fams.size(); ++w) {
      const Integer level = ch.floors[w] + 1;
      Builder b(dim, true);
      b.level(fams[w], level);
      IntVector next = ch.floors;
      next[w] += 1;
      std::vector<std::size_t> also;
      bool blocked = false, duplicate = false;
      for (std::size_t u = 0; u < fams.size() && !blocked; ++u) {
        if (u == w) continue;
        const auto lambda = parallel_ratio(fams[u].gradient, fams[w].gradient);
        if (!lambda) {
          b.slab(fams[u], ch.floors[u], true);
          continue;
        }
        const Rational value = *lambda * (Rational(level) - fams[w].constant) + fams[u].constant;
        if (is_integer(value)) {
          if (value != Rational(ch.floors[u] + 1)) blocked = true;
          if (u < w) duplicate = true;
          next[u] += 1;
          also.push_back(u);
        } else if (value <= Rational(ch.floors[u]) || value >= Rational(ch.floors[u] + 1)) {
          blocked = true;
        }
      }
      if (blocked || duplicate) continue;
      const auto point = b.interior();
      if (!point) continue;
      const auto to = set.find(next);
      if (!to) throw Error("internal", "facet leads outside the enumerated chambers");
      Move m;
      m.from = ch.id;
      m.to = *to;
      m.family = w;
      m.level = level;
      m.also = std::move(also);
      m.witness = reduced(*point);
      for (const auto& f : fams)
        if (is_integer(f.value(*point))) ++m.walls_through;
      moves.push_back(std::move(m));
    }
  }
  return moves;
}

std::optional<CommonLocus> common_locus(const ModuliComponent& c, const ChamberSet& set) {
  const std::size_t dim = c.dim();
  if (dim < 2 || set.chambers.empty()) return std::nullopt;
  const auto& fams = c.families;
  const Chamber& home = set.chambers.front();
  std::optional<CommonLocus> best;

  for (std::size_t w1 = 0; w1 < fams.size(); ++w1) {
    for (std::size_t w2 = w1 + 1; w2 < fams.size(); ++w2) {
      if (parallel_ratio(fams[w2].gradient, fams[w1].gradient)) continue;
      for (int d1 = 0; d1 < 2; ++d1) {
        for (int d2 = 0; d2 < 2; ++d2) {
          const Integer l1 = home.floors[w1] + d1, l2 = home.floors[w2] + d2;
          Builder b(dim, true);
          b.level(fams[w1], l1);
          b.level(fams[w2], l2);
          for (std::size_t u = 0; u < fams.size(); ++u) {
            if (u == w1 || u == w2) continue;
            linalg::RatMatrix span(3, dim);
            for (std::size_t j = 0; j < dim; ++j) {
              span(0, j) = fams[w1].gradient[j];
              span(1, j) = fams[w2].gradient[j];
              span(2, j) = fams[u].gradient[j];
            }
            // Families constant on the flat only need the closed slab.
            b.slab(fams[u], home.floors[u], linalg::rank(span) == 3);
          }
          const auto q = b.interior();
          if (!q) continue;

          CommonLocus locus{w1, w2, l1, l2, reduced(*q), {}, {}};
          for (std::size_t u = 0; u < fams.size(); ++u)
            if (is_integer(fams[u].value(*q))) locus.through.push_back(u);

          std::set<std::size_t> touched;
          const std::size_t r = locus.through.size();
          for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
            lp::Problem cone(dim);
            for (std::size_t i = 0; i < r; ++i) {
              RatVector row(dim);
              for (std::size_t j = 0; j < dim; ++j) row[j] = fams[locus.through[i]].gradient[j];
              const bool up = (mask >> i) & 1;
              if (!up)
                for (auto& x : row) x = -x;
              cone.add(row, lp::Relation::kGreaterEqual, 1);
            }
            if (lp::maximize(cone).status == lp::Status::kInfeasible) continue;
            IntVector floors = floors_at(fams, *q);
            for (std::size_t i = 0; i < r; ++i)
              if (!((mask >> i) & 1)) floors[locus.through[i]] -= 1;
            if (auto id = set.find(floors)) touched.insert(*id);
          }
          locus.touched.assign(touched.begin(), touched.end());
          if (!best || locus.touched.size() > best->touched.size()) best = std::move(locus);
        }
      }
    }
  }
  return best;
}

ModuliReport full_moduli(const ColoredCubicGraph& g, const SlopeSystem& s, const ModuliOptions& options) {
  ModuliReport report{g, s, options, enumerate_winding_classes(g, s, options.bound), 0, {}, {}};
  const linalg::IntMatrix a = slope_coboundary(g, s);
  report.based_dimension = a.cols() - linalg::rank(a);
  for (std::size_t i = 0; i < report.search.classes.size(); ++i) {
    const WindingClass& rho = report.search.classes[i];
    auto solved = based_component(g, s, rho);
    if (std::holds_alternative<EmptyComponent>(solved)) continue;
    ModuliComponent comp = std::get<ModuliComponent>(std::move(solved));
    if (comp.fully_degenerate()) {
      report.dropped.push_back({i, rho, comp.degeneracies});
      continue;
    }
    ComponentSummary summary{i, std::move(comp), {}, std::nullopt, {}};
    summary.sample = sample_nondegenerate(summary.component, options.sampling);
    if (!summary.sample.sample)
      summary.notes.push_back("no nondegenerate sample within " + std::to_string(summary.sample.attempts) +
                              " attempts and no degeneracy certificate");
    if (options.compute_chambers) {
      if (summary.component.dim() <= options.chambers.dimension_cap || options.chambers.best_effort)
        summary.chambers = enumerate_chambers(summary.component, options.chambers);
      else
        summary.notes.push_back("chambers skipped: dimension " + std::to_string(summary.component.dim()) +
                                " exceeds the cap " + std::to_string(options.chambers.dimension_cap));
    }
    report.components.push_back(std::move(summary));
  }
  return report;
}

}  // namespace trigrid
