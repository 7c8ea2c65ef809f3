#include <numeric>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "trigrid/error.hpp"
#include "trigrid/linalg.hpp"
#include "trigrid/moduli.hpp"

using namespace trigrid;
using test::lib;

namespace {

// Fraction-free elimination determinant.
Integer bareiss(std::vector<IntVector> m) {
  const std::size_t n = m.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out,
                  std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, out, i + 1);
    cur.pop_back();
  }
}

// Order of the torsion of Z^rows / A Z^cols: gcd of the maximal nonzero minors.
Integer torsion_order(const linalg::IntMatrix& a) {
  const std::size_t r = linalg::rank(a);
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  combinations(a.rows(), r, cur, rows);
  combinations(a.cols(), r, cur, cols);
  Integer g = 0;
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      std::vector<IntVector> m;
      for (std::size_t i : rs) {
        IntVector row;
        for (std::size_t j : cs) row.push_back(a(i, j));
        m.push_back(row);
      }
      const Integer d = bareiss(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      if (g == 1) return g;
    }
  return g;
}

Rational pair_value(const SlopeSystem& s, Color c, const Point& a, const Point& b) {
  const auto& n = s.normal(c);
  return Rational(static_cast<long>(n[0])) * (a[0] - b[0]) + Rational(static_cast<long>(n[1])) * (a[1] - b[1]);
}

RatVector random_parameters(std::mt19937_64& rng, std::size_t dim) {
  RatVector t(dim);
  for (auto& x : t) {
    x = Rational(static_cast<long>(rng() % 2000) - 1000, static_cast<long>(1 + rng() % 97));
    x.canonicalize();
  }
  return t;
}

ModuliComponent as_component(const std::variant<ModuliComponent, EmptyComponent>& v) {
  REQUIRE(std::holds_alternative<ModuliComponent>(v));
  return std::get<ModuliComponent>(v);
}

}  // namespace

TEST_SUITE("moduli") {
  TEST_CASE("slope coboundary shape") {
    const auto g = lib("k33");
    const auto a = slope_coboundary(g, SlopeSystem::standard());
    CHECK(a.rows() == g.edge_count());
    CHECK(a.cols() == 4 * g.bridge_number() - 2);
    CHECK(slope_coboundary(g, SlopeSystem::standard(), false).cols() == 4 * g.bridge_number());
  }

  TEST_CASE("theta with rho = 0 is a single coincident point") {
    const auto g = lib("theta");
    const auto c = as_component(based_component(g, SlopeSystem::standard(), zero_class(g)));
    CHECK(c.dim() == 0);
    CHECK(c.fully_degenerate());
    const auto pts = c.positions({});
    CHECK(pts[0] == pts[1]);
  }

  TEST_CASE("K4 classes") {
    const auto g = lib("k4");
    const auto s = SlopeSystem::standard();
    const auto zero = as_component(based_component(g, s, zero_class(g)));
    CHECK(zero.dim() == 0);
    CHECK(zero.fully_degenerate());
    const auto search = enumerate_winding_classes(g, s, 1);
    CHECK(search.class_count == 2);
    CHECK(search.complete);
    REQUIRE(search.classes.size() == 2);
    CHECK(search.classes[0].is_zero());
    const auto other = as_component(based_component(g, s, search.classes[1]));
    CHECK(other.dim() == 0);
    CHECK_FALSE(other.fully_degenerate());
    // Every functional is constant on a point chart; none is integral.
    for (const auto& f : other.families) CHECK_FALSE(is_integer(f.constant));
    CHECK(other.nondegenerate_at({}));
  }

  TEST_CASE("K33 zero class has a 2-dimensional chart") {
    const auto g = lib("k33");
    const auto c = as_component(based_component(g, SlopeSystem::standard(), zero_class(g)));
    CHECK(c.dim() == 2);
    CHECK(c.families.size() == 3);
    CHECK(degeneracy_walls(c).size() == 48);
  }

  TEST_CASE("wrong winding length is rejected") {
    try {
      based_component(lib("k4"), SlopeSystem::standard(), WindingClass{IntVector(3)});
      FAIL("expected invalid_winding_class");
    } catch (const DomainError& e) {
      CHECK(e.code() == "invalid_winding_class");
    }
  }

  TEST_CASE("winding bound zero gives only the zero class") {
    for (const auto& name : builtin_graph_names()) {
      const auto search = enumerate_winding_classes(lib(name), SlopeSystem::standard(), 0);
      REQUIRE(search.classes.size() <= 1);
      if (!search.classes.empty()) CHECK(search.classes[0].is_zero());
    }
  }

  TEST_CASE("theta classes are all fully degenerate") {
    const auto g = lib("theta");
    const auto search = enumerate_winding_classes(g, SlopeSystem::standard(), 1);
    CHECK(search.class_count == 1);
    for (const auto& rho : search.classes)
      CHECK(as_component(based_component(g, SlopeSystem::standard(), rho)).fully_degenerate());
  }

  TEST_CASE("class counts match the torsion of the slope coboundary") {
    const auto s = SlopeSystem::standard();
    for (const auto& name : builtin_graph_names()) {
      const auto g = lib(name);
      const auto a = slope_coboundary(g, s);
      const auto search = enumerate_winding_classes(g, s, 1);
      CHECK_MESSAGE(search.class_count == torsion_order(a), name);
    }
    CHECK(enumerate_winding_classes(lib("k33"), s, 1).class_count == 1);
    CHECK(enumerate_winding_classes(lib("prism"), s, 1).class_count == 2);
  }

  TEST_CASE("chart points solve the slope equations exactly") {
    std::mt19937_64 rng(37);
    const auto s = SlopeSystem::standard();
    for (const auto& name : builtin_graph_names()) {
      const auto g = lib(name);
      for (const auto& rho : enumerate_winding_classes(g, s, 1).classes) {
        const auto result = based_component(g, s, rho);
        if (!std::holds_alternative<ModuliComponent>(result)) continue;
        const auto& c = std::get<ModuliComponent>(result);
        CHECK(c.dim() + linalg::rank(slope_coboundary(g, s)) == 4 * g.bridge_number() - 2);
        for (int trial = 0; trial < 5; ++trial) {
          const auto p = c.positions(random_parameters(rng, c.dim()));
          CHECK(p[0] == Point{0, 0});
          for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& edge = g.edge(e);
            const Point r{Rational(rho.rho[2 * e]), Rational(rho.rho[2 * e + 1])};
            const Point head{p[edge.head][0] + r[0], p[edge.head][1] + r[1]};
            CHECK(pair_value(s, edge.color, head, p[edge.tail]) == 0);
          }
        }
      }
    }
  }

  TEST_CASE("moduli dimensions") {
    const auto s = SlopeSystem::standard();
    const auto k33 = moduli_dimension(lib("k33"), s);
    CHECK(k33.based == 2);
    CHECK(k33.full == 4);
    CHECK(k33.nonempty);
    const auto k4 = moduli_dimension(lib("k4"), s);
    CHECK(k4.full == 2);
    CHECK(k4.nonempty);
    CHECK(moduli_dimension(lib("torus8"), s).full == 5);
    CHECK_FALSE(moduli_dimension(lib("theta"), s).nonempty);
  }

  TEST_CASE("Halton points") {
    CHECK(halton_point(1, 2) == RatVector{Rational(1, 2), Rational(1, 3)});
    CHECK(halton_point(2, 1) == RatVector{Rational(1, 4)});
    CHECK(halton_point(3, 3) == RatVector{Rational(3, 4), Rational(1, 9), Rational(3, 5)});
    for (std::uint64_t i = 1; i < 200; ++i)
      for (const auto& x : halton_point(i, 5)) {
        CHECK(x > 0);
        CHECK(x < 1);
      }
  }

  TEST_CASE("K33 sample avoids every pair functional") {
    const auto g = lib("k33");
    const auto s = SlopeSystem::standard();
    const auto c = as_component(based_component(g, s, zero_class(g)));
    const auto result = sample_nondegenerate(c);
    REQUIRE(result.sample);
    const auto p = c.positions(result.sample->parameters);
    std::size_t checked = 0;
    for (Color col : kColors)
      for (VertexId i = 0; i < 6; ++i)
        for (VertexId k = i + 1; k < 6; ++k) {
          if (g.joined(i, k, col)) continue;
          CHECK_FALSE(is_integer(pair_value(s, col, p[i], p[k])));
          ++checked;
        }
    CHECK(checked == 36);
    CHECK_FALSE(check_diagram(g, s, result.sample->diagram.points));
  }

  TEST_CASE("sampling is deterministic in the seed") {
    const auto g = lib("torus8");
    const auto s = SlopeSystem::standard();
    const auto c = as_component(based_component(g, s, zero_class(g)));
    const auto a = sample_nondegenerate(c, {5, 64});
    const auto b = sample_nondegenerate(c, {5, 64});
    REQUIRE(a.sample);
    REQUIRE(b.sample);
    CHECK(a.sample->parameters == b.sample->parameters);
    CHECK(a.attempts == b.attempts);
  }

  TEST_CASE("fully degenerate components report certificates instead of samples") {
    const auto g = lib("theta");
    const auto c = as_component(based_component(g, SlopeSystem::standard(), zero_class(g)));
    const auto r = sample_nondegenerate(c);
    CHECK_FALSE(r.sample);
    CHECK_FALSE(r.certificates.empty());
  }

  TEST_CASE("translating a diagram preserves validity") {
    std::mt19937_64 rng(41);
    const auto s = SlopeSystem::standard();
    for (const auto& name : {"k33", "prism", "torus8"}) {
      const auto g = lib(name);
      const auto search = enumerate_winding_classes(g, s, 1);
      for (const auto& rho : search.classes) {
        const auto result = based_component(g, s, rho);
        if (!std::holds_alternative<ModuliComponent>(result)) continue;
        const auto sample = sample_nondegenerate(std::get<ModuliComponent>(result));
        if (!sample.sample) continue;
        for (int trial = 0; trial < 5; ++trial) {
          const Rational dx(static_cast<long>(rng() % 1000), 1 + static_cast<long>(rng() % 89));
          const Rational dy(static_cast<long>(rng() % 1000), 1 + static_cast<long>(rng() % 89));
          auto pts = sample.sample->diagram.points;
          for (auto& p : pts) p = {p[0] + dx, p[1] + dy};
          CHECK_FALSE(check_diagram(g, s, pts));
        }
      }
    }
  }

  TEST_CASE("points on a wall are rejected") {
    const auto g = lib("k33");
    const auto c = as_component(based_component(g, SlopeSystem::standard(), zero_class(g)));
    const auto walls = degeneracy_walls(c);
    REQUIRE_FALSE(walls.empty());
    // Find a chart point on the first wall: solve gradient . t = offset - constant.
    const auto& w = walls.front();
    RatVector t(c.dim(), Rational(0));
    std::size_t j = 0;
    while (w.gradient[j] == 0) ++j;
    t[j] = (Rational(w.offset) - w.constant) / Rational(w.gradient[j]);
    try {
      realize(c, t);
      FAIL("expected a degenerate point");
    } catch (const DomainError& e) {
      CHECK(e.code() == "degenerate_point");
    }
    CHECK(check_diagram(g, SlopeSystem::standard(), c.positions(t)));
  }

  TEST_CASE("coincident points are named") {
    const auto g = lib("k4");
    const std::vector<Point> pts(4, Point{0, 0});
    const auto msg = check_diagram(g, SlopeSystem::standard(), pts);
    REQUIRE(msg);
    CHECK_THROWS_AS(make_diagram(g, SlopeSystem::standard(), pts), DomainError);
  }
}
