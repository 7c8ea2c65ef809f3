#include "trigrid/rational.hpp"

#include <cctype>

#include "trigrid/error.hpp"

namespace trigrid {

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw ParseError(1, "not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  std::string s(text);
  auto valid_int = [](std::string_view v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') fail();
    Integer d(den);
    if (d == 0) fail();
    Rational q(Integer(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), fraction = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (!valid_int(whole) || whole[0] == '-' || (fraction.empty() || !valid_int(fraction)) ||
        fraction[0] == '-' || fraction[0] == '+')
      fail();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fraction.size());
    Rational q(Integer(whole) * scale + Integer(fraction), scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  if (!valid_int(s)) fail();
  return Rational(Integer(s[0] == '+' ? s.substr(1) : s));
}

Integer lcm_of_denominators(const RatVector& values) {
  Integer out = 1;
  for (const auto& v : values) {
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v.get_den_mpz_t());
  }
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace trigrid
