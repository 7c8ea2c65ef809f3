#include <random>

#include "doctest.h"
#include "trigrid/error.hpp"
#include "trigrid/linalg.hpp"
#include "trigrid/lp.hpp"
#include "trigrid/rational.hpp"

using namespace trigrid;
using linalg::IntMatrix;
using linalg::RatMatrix;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Determinant by cofactor expansion, for small oracles.
Integer det(const std::vector<IntVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<IntVector> minor;
    for (std::size_t i = 1; i < n; ++i) {
      IntVector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const Integer term = m[0][j] * det(minor);
    acc += (j % 2 == 0) ? term : Integer(-term);
  }
  return acc;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("string form always carries a denominator") {
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    Rational q(4, 6);
    q.canonicalize();
    CHECK(to_string(q) == "2/3");
  }

  TEST_CASE("parse accepts fractions, integers and finite decimals") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("-2.5") == Rational(-5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
  }

  TEST_CASE("floor, ceil and frac agree with their definitions") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 37);
    for (int i = 0; i < 500; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      const Integer f = floor(q), c = ceil(q);
      CHECK(Rational(f) <= q);
      CHECK(q < Rational(f + 1));
      CHECK(Rational(c) >= q);
      CHECK(Rational(c - 1) < q);
      const Rational fr = frac(q);
      CHECK(fr >= 0);
      CHECK(fr < 1);
      CHECK(is_integer(q - fr));
      CHECK(parse_rational(to_string(q)) == q);
    }
  }

  TEST_CASE("lcm of denominators") {
    CHECK(lcm_of_denominators({Rational(1, 2), Rational(1, 3), Rational(5)}) == 6);
    CHECK(lcm_of_denominators({}) == 1);
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
      const RatMatrix a = linalg::to_rational(random_int_matrix(rng, r, c, -2, 2));
      const auto ker = linalg::kernel(a);
      CHECK(ker.size() + linalg::rank(a) == c);
      for (const auto& v : ker)
        for (const auto& x : a.apply(v)) CHECK(x == 0);
      for (const auto& y : linalg::left_kernel(a))
        for (const auto& x : a.transposed().apply(y)) CHECK(x == 0);
    }
  }

  TEST_CASE("affine solve returns a solution or an inconsistency certificate") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 4;
      const RatMatrix a = linalg::to_rational(random_int_matrix(rng, r, c, -2, 2));
      RatVector b(r);
      for (auto& x : b) x = static_cast<long>(rng() % 5) - 2;
      const auto result = linalg::solve_affine(a, b);
      if (const auto* s = std::get_if<linalg::AffineSolution>(&result)) {
        CHECK(a.apply(s->origin) == b);
        CHECK(s->directions.size() == c - linalg::rank(a));
      } else {
        const auto& y = std::get<linalg::InconsistentRows>(result).certificate;
        for (const auto& x : a.transposed().apply(y)) CHECK(x == 0);
        CHECK(dot(y, b) != 0);
      }
    }
  }

  TEST_CASE("hermite basis of small lattices") {
    CHECK(linalg::hermite_basis({iv({2, 0}), iv({0, 2}), iv({1, 1})}, 2) ==
          std::vector<IntVector>{iv({1, 1}), iv({0, 2})});
    CHECK(linalg::hermite_basis({}, 3).empty());
    CHECK(linalg::hermite_basis({iv({1, 0}), iv({0, 1})}, 2) == std::vector<IntVector>{iv({1, 0}), iv({0, 1})});
  }

  TEST_CASE("hermite basis is canonical and membership matches brute force") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<IntVector> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(iv({static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3}));
      const auto h = linalg::hermite_basis(gens, 2);
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      shuffled.push_back(iv({0, 0}));
      CHECK(linalg::hermite_basis(shuffled, 2) == h);
      // Brute-force membership: small integer combinations of the generators.
      std::vector<IntVector> reachable;
      for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b)
          for (int c = -6; c <= 6; ++c)
            reachable.push_back(iv({a * gens[0][0].get_si() + b * gens[1][0].get_si() + c * gens[2][0].get_si(),
                                    a * gens[0][1].get_si() + b * gens[1][1].get_si() + c * gens[2][1].get_si()}));
      for (const auto& v : reachable) {
        if (abs(v[0]) > 3 || abs(v[1]) > 3) continue;
        CHECK(linalg::in_lattice(v, h));
        CHECK(linalg::reduce_modulo(v, h) == iv({0, 0}));
      }
    }
  }

  TEST_CASE("lattice index equals the determinant ratio") {
    const auto super = linalg::hermite_basis({iv({1, 0}), iv({0, 1})}, 2);
    const auto sub = linalg::hermite_basis({iv({2, 1}), iv({1, 3})}, 2);
    const auto idx = linalg::lattice_index(sub, super);
    REQUIRE(idx);
    CHECK(*idx == abs(det({iv({2, 1}), iv({1, 3})})));
    CHECK_FALSE(linalg::lattice_index(linalg::hermite_basis({iv({1, 0})}, 2), super));
  }

  TEST_CASE("integer kernel is saturated") {
    IntMatrix a(1, 3);
    a(0, 0) = 2;
    a(0, 1) = 4;
    a(0, 2) = 6;
    const auto k = linalg::integer_kernel(a);
    CHECK(k.size() == 2);
    // (1, 1, -1) is in the kernel and must be an integer combination.
    CHECK(linalg::in_lattice(iv({1, 1, -1}), k));
    CHECK(linalg::in_lattice(iv({2, -1, 0}), k));
  }

  TEST_CASE("primitive integer direction") {
    CHECK(linalg::primitive_integer({Rational(1, 2), Rational(-3, 4)}) == iv({2, -3}));
    CHECK(linalg::gcd_of(iv({6, -9, 15})) == 3);
  }
}

TEST_SUITE("lp") {
  TEST_CASE("bounded maximum at a vertex") {
    lp::Problem p(2, true);
    p.add({1, 1}, lp::Relation::kLessEqual, 4);
    p.add({1, 3}, lp::Relation::kLessEqual, 6);
    p.objective = {3, 2};
    const auto r = lp::maximize(p);
    REQUIRE(r.status == lp::Status::kOptimal);
    CHECK(r.value == 12);
    CHECK(r.x == RatVector{4, 0});
  }

  TEST_CASE("infeasible and unbounded problems") {
    lp::Problem p(1);
    p.add({1}, lp::Relation::kGreaterEqual, 2);
    p.add({1}, lp::Relation::kLessEqual, 1);
    CHECK(lp::maximize(p).status == lp::Status::kInfeasible);
    lp::Problem q(1);
    q.add({1}, lp::Relation::kGreaterEqual, 0);
    q.objective = {1};
    CHECK(lp::maximize(q).status == lp::Status::kUnbounded);
  }

  TEST_CASE("free variables and equality rows") {
    lp::Problem p(2);
    p.add({1, 1}, lp::Relation::kEqual, Rational(1, 3));
    p.add({1, -1}, lp::Relation::kLessEqual, -2);
    p.add({1, 0}, lp::Relation::kGreaterEqual, -5);
    p.objective = {1, 0};
    const auto r = lp::maximize(p);
    REQUIRE(r.status == lp::Status::kOptimal);
    CHECK(r.value == Rational(-5, 6));
  }

  TEST_CASE("2D optimum matches enumeration of constraint intersections") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 80; ++trial) {
      lp::Problem p(2);
      std::vector<std::array<Rational, 3>> rows;  // a x + b y <= c
      for (int k = 0; k < 5; ++k) {
        std::array<Rational, 3> row = {Rational(static_cast<long>(rng() % 7) - 3),
                                       Rational(static_cast<long>(rng() % 7) - 3), Rational(static_cast<long>(rng() % 9))};
        rows.push_back(row);
        p.add({row[0], row[1]}, lp::Relation::kLessEqual, row[2]);
      }
      for (const auto& [a, b, c] : std::vector<std::array<long, 3>>{{1, 0, 5}, {-1, 0, 5}, {0, 1, 5}, {0, -1, 5}}) {
        rows.push_back({Rational(a), Rational(b), Rational(c)});
        p.add({a, b}, lp::Relation::kLessEqual, c);
      }
      p.objective = {static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2};
      const auto r = lp::maximize(p);
      REQUIRE(r.status == lp::Status::kOptimal);  // box bounded, origin feasible
      std::optional<Rational> best;
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
          const Rational d = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
          if (d == 0) continue;
          const Rational x = (rows[i][2] * rows[j][1] - rows[i][1] * rows[j][2]) / d;
          const Rational y = (rows[i][0] * rows[j][2] - rows[i][2] * rows[j][0]) / d;
          bool ok = true;
          for (const auto& row : rows) ok = ok && row[0] * x + row[1] * y <= row[2];
          if (!ok) continue;
          const Rational v = p.objective[0] * x + p.objective[1] * y;
          if (!best || v > *best) best = v;
        }
      REQUIRE(best);
      CHECK(r.value == *best);
    }
  }
}
