#include "trigrid/slopes.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "trigrid/error.hpp"
#include "trigrid/rational.hpp"

namespace trigrid {

IntPair primitive(IntPair v) {
  const std::int64_t g = std::gcd(v[0], v[1]);
  if (g == 0) throw DomainError("invalid_slope", "zero slope vector");
  v[0] /= g;
  v[1] /= g;
  if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) v = {-v[0], -v[1]};
  return v;
}

namespace {

bool parallel(const IntPair& a, const IntPair& b) { return a[0] * b[1] - a[1] * b[0] == 0; }

std::string pair_string(const IntPair& p) { return std::to_string(p[0]) + "," + std::to_string(p[1]); }

}  // namespace

SlopeSystem::SlopeSystem(std::array<IntPair, 3> normals) : normals_(normals) {
  for (auto& n : normals_) {
    if (std::gcd(n[0], n[1]) != 1)
      throw DomainError("invalid_slope", "normal (" + pair_string(n) + ") is not primitive");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (parallel(normals_[i], normals_[j]))
        throw DomainError("invalid_slope", "normals (" + pair_string(normals_[i]) + ") and (" +
                                               pair_string(normals_[j]) + ") are parallel");
  label_ = "custom:" + pair_string(normals_[0]) + ":" + pair_string(normals_[1]) + ":" + pair_string(normals_[2]);
}

SlopeSystem SlopeSystem::standard() {
  SlopeSystem s({IntPair{1, 0}, IntPair{0, 1}, IntPair{1, 1}});
  s.label_ = "standard";
  return s;
}

SlopeSystem SlopeSystem::from_normals(IntPair red, IntPair blue, IntPair green) {
  return SlopeSystem({red, blue, green});
}

SlopeSystem SlopeSystem::from_directions(IntPair red, IntPair blue, IntPair green) {
  auto rotate = [](IntPair d) { return primitive(IntPair{-d[1], d[0]}); };
  return SlopeSystem({rotate(red), rotate(blue), rotate(green)});
}

bool SlopeSystem::is_standard() const { return *this == standard(); }

bool MarkovTriple::valid() const {
  if (a <= 0 || b <= 0 || c <= 0) return false;
  const Integer x = static_cast<long>(a), y = static_cast<long>(b), z = static_cast<long>(c);
  return Integer(x * x + y * y + z * z) == Integer(3 * x * y * z);
}

MarkovTriple mutate(const MarkovTriple& t, int position) {
  switch (position) {
    case 0: return {3 * t.b * t.c - t.a, t.b, t.c};
    case 1: return {t.a, 3 * t.a * t.c - t.b, t.c};
    default: return {t.a, t.b, 3 * t.a * t.b - t.c};
  }
}

std::vector<MarkovTriple> enumerate_markov(std::int64_t bound) {
  if (bound < 1) throw UsageError("markov bound must be >= 1");
  if (bound > 1'000'000'000) throw UsageError("markov bound must be <= 1e9");
  auto sorted = [](MarkovTriple t) {
    std::array<std::int64_t, 3> v{t.a, t.b, t.c};
    std::sort(v.begin(), v.end());
    return MarkovTriple{v[0], v[1], v[2]};
  };
  std::set<MarkovTriple> seen{MarkovTriple{1, 1, 1}};
  std::queue<MarkovTriple> frontier;
  frontier.push({1, 1, 1});
  while (!frontier.empty()) {
    const MarkovTriple t = frontier.front();
    frontier.pop();
    for (int pos = 0; pos < 3; ++pos) {
      const MarkovTriple next = sorted(mutate(t, pos));
      if (next.a < 1 || next.c > bound) continue;
      if (seen.insert(next).second) frontier.push(next);
    }
  }
  return {seen.begin(), seen.end()};
}

SlopeTriple solve_slope_triple(const MarkovTriple& t, IntPair alpha, IntPair beta) {
  if (!t.valid()) throw DomainError("invalid_markov", "not a Markov triple");
  if ((alpha[0] == 0 && alpha[1] == 0) || (beta[0] == 0 && beta[1] == 0) || parallel(alpha, beta))
    throw DomainError("invalid_slope", "alpha and beta must be nonzero and non-parallel");
  const std::int64_t a2 = t.a * t.a, b2 = t.b * t.b, c2 = t.c * t.c;
  IntPair gamma{};
  for (int k = 0; k < 2; ++k) {
    const std::int64_t num = -(a2 * alpha[k] + b2 * beta[k]);
    if (num % c2 != 0)
      throw DomainError("non_integral_slope", std::string("gamma component ") + (k == 0 ? "x" : "y") + " = " +
                                                  std::to_string(num) + "/" + std::to_string(c2) +
                                                  " is not an integer");
    gamma[k] = num / c2;
  }
  SlopeTriple out{gamma, SlopeSystem::from_directions(alpha, beta, gamma)};
  out.system.set_label(std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ":" +
                       pair_string(alpha) + ":" + pair_string(beta));
  return out;
}

SlopeSystem parse_slopes(std::string_view spec) {
  if (spec == "standard") return SlopeSystem::standard();
  auto fail = [&] {
    throw UsageError("slopes must be 'standard' or 'a,b,c:ax,ay:bx,by', got '" + std::string(spec) + "'");
  };
  std::string s(spec);
  std::replace(s.begin(), s.end(), ':', ' ');
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<std::int64_t> v;
  for (std::int64_t x; in >> x;) v.push_back(x);
  if (!in.eof() || v.size() != 7) fail();
  // Reject stray separators such as "1,,1".
  if (std::count(spec.begin(), spec.end(), ':') != 2 || std::count(spec.begin(), spec.end(), ',') != 4) fail();
  return solve_slope_triple({v[0], v[1], v[2]}, {v[3], v[4]}, {v[5], v[6]}).system;
}

}  // namespace trigrid
