#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace trigrid {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Fractional part in [0, 1).
Rational frac(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Always "p/q" with q > 0, including integers ("3/1").
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p/q", "p", and finite decimals such as "0.125". Throws ParseError.
Rational parse_rational(std::string_view text);

Integer lcm_of_denominators(const RatVector& values);

RatVector to_rational(const IntVector& v);

Rational dot(const RatVector& a, const RatVector& b);

}  // namespace trigrid
