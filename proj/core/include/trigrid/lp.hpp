#pragma once

#include <vector>

#include "trigrid/rational.hpp"

// Exact dense two-phase simplex over the rationals (Bland's rule). Sized for
// the small systems that arise from chamber and realizability questions.
namespace trigrid::lp {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct Constraint {
  RatVector coeffs;
  Relation relation;
  Rational rhs;
};

struct Problem {
  std::size_t num_vars = 0;
  // Variables flagged here are >= 0; all others are free.
  std::vector<bool> nonnegative;
  std::vector<Constraint> constraints;
  RatVector objective;  // maximized

  explicit Problem(std::size_t n, bool all_nonnegative = false)
      : num_vars(n), nonnegative(n, all_nonnegative), objective(n, Rational(0)) {}

  void add(RatVector coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Result {
  Status status = Status::kInfeasible;
  RatVector x;
  Rational value;
};

Result maximize(const Problem& problem);

}  // namespace trigrid::lp
