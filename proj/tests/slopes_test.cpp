#include <cmath>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "trigrid/chambers.hpp"
#include "trigrid/error.hpp"
#include "trigrid/slopes.hpp"

using namespace trigrid;
using test::lib;

TEST_SUITE("slopes") {
  TEST_CASE("standard system") {
    const auto s = SlopeSystem::standard();
    CHECK(s.normal(Color::kRed) == IntPair{1, 0});
    CHECK(s.normal(Color::kBlue) == IntPair{0, 1});
    CHECK(s.normal(Color::kGreen) == IntPair{1, 1});
    CHECK(s.is_standard());
    CHECK(s.label() == "standard");
    CHECK(parse_slopes("standard") == s);
  }

  TEST_CASE("directions rotate to normals") {
    const auto s = SlopeSystem::from_directions({0, 1}, {1, 0}, {1, -1});
    CHECK(s.normal(Color::kRed) == IntPair{1, 0});
    CHECK(s.normal(Color::kBlue) == IntPair{0, 1});
    CHECK(s.normal(Color::kGreen) == IntPair{1, 1});
    CHECK(s.is_standard());
  }

  TEST_CASE("invalid systems are rejected") {
    CHECK_THROWS_AS(SlopeSystem::from_normals({1, 0}, {2, 0}, {1, 1}), DomainError);
    CHECK_THROWS_AS(SlopeSystem::from_normals({2, 0}, {0, 1}, {1, 1}), DomainError);
    CHECK_THROWS_AS(SlopeSystem::from_normals({0, 0}, {0, 1}, {1, 1}), DomainError);
    CHECK_THROWS_AS(parse_slopes("1,1,1"), UsageError);
    CHECK_THROWS_AS(parse_slopes("1,1,x:1,0:0,1"), UsageError);
  }

  TEST_CASE("Markov enumeration small bounds") {
    CHECK(enumerate_markov(1) == std::vector<MarkovTriple>{{1, 1, 1}});
    CHECK(enumerate_markov(2) == std::vector<MarkovTriple>{{1, 1, 1}, {1, 1, 2}});
    const auto five = enumerate_markov(5);
    CHECK(std::find(five.begin(), five.end(), MarkovTriple{1, 2, 5}) != five.end());
    CHECK(1 + 4 + 25 == 3 * 1 * 2 * 5);
    CHECK_THROWS_AS(enumerate_markov(0), UsageError);
  }

  TEST_CASE("Markov enumeration matches a quadratic brute force") {
    // For each a <= b, c solves c^2 - 3ab c + a^2 + b^2 = 0.
    std::set<MarkovTriple> brute;
    const std::int64_t bound = 1000;
    for (std::int64_t a = 1; a <= bound; ++a)
      for (std::int64_t b = a; b <= bound; ++b) {
        const std::int64_t disc = 9 * a * a * b * b - 4 * (a * a + b * b);
        if (disc < 0) continue;
        const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(disc))));
        for (std::int64_t s = std::max<std::int64_t>(0, r - 2); s <= r + 2; ++s) {
          if (s * s != disc || (3 * a * b + s) % 2 != 0) continue;
          for (std::int64_t c : {(3 * a * b + s) / 2, (3 * a * b - s) / 2})
            if (c >= b && c <= bound) brute.insert({a, b, c});
        }
      }
    const auto list = enumerate_markov(bound);
    CHECK(std::set<MarkovTriple>(list.begin(), list.end()) == brute);
    CHECK(list.size() == 13);
    CHECK(std::is_sorted(list.begin(), list.end()));
  }

  TEST_CASE("mutation is an involution and preserves the equation") {
    for (const auto& t : enumerate_markov(1000)) {
      CHECK(t.valid());
      for (int pos = 0; pos < 3; ++pos) {
        const auto m = mutate(t, pos);
        CHECK(m.valid());
        CHECK(mutate(m, pos) == t);
      }
    }
    CHECK_FALSE(MarkovTriple{1, 2, 3}.valid());
  }

  TEST_CASE("slope triples") {
    CHECK(solve_slope_triple({1, 1, 1}, {1, 0}, {0, 1}).gamma == IntPair{-1, -1});
    CHECK(solve_slope_triple({1, 1, 2}, {4, 0}, {0, 4}).gamma == IntPair{-1, -1});
    try {
      solve_slope_triple({1, 1, 2}, {1, 0}, {0, 1});
      FAIL("expected non-integral slope");
    } catch (const DomainError& e) {
      CHECK(e.code() == "non_integral_slope");
    }
    const auto parsed = parse_slopes("1,1,2:4,0:0,4");
    CHECK(parsed == solve_slope_triple({1, 1, 2}, {4, 0}, {0, 4}).system);
    CHECK(primitive({4, -6}) == IntPair{2, -3});
  }

  TEST_CASE("based dimension bound under a non-standard slope system") {
    const SlopeSystem s = solve_slope_triple({1, 2, 5}, {25, 0}, {0, 25}).system;
    CHECK_FALSE(s.is_standard());
    for (const auto& name : builtin_graph_names()) {
      const auto g = lib(name);
      ModuliOptions opts;
      opts.compute_chambers = false;
      const auto r = full_moduli(g, s, opts);
      CHECK(r.based_dimension + 2 >= g.bridge_number());
    }
  }
}
