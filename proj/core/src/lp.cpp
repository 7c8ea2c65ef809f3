#include "trigrid/lp.hpp"

#include <cassert>
#include <optional>

namespace trigrid::lp {

namespace {

// Tableau in equality form: rows are constraints, the last column is the rhs.
// `cost` holds reduced costs for minimization; basic variables have zero cost.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * (cols + 1)), cost_(cols + 1), basis_(rows) {}

  Rational& at(std::size_t i, std::size_t j) { return a_[i * (cols_ + 1) + j]; }
  Rational& rhs(std::size_t i) { return at(i, cols_); }
  Rational& cost(std::size_t j) { return cost_[j]; }
  Rational& objective() { return cost_[cols_]; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const Rational f = at(i, c);
      for (std::size_t j = 0; j <= cols_; ++j)
        if (at(r, j) != 0) at(i, j) -= f * at(r, j);
    }
    if (cost_[c] != 0) {
      const Rational f = cost_[c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (at(r, j) != 0) cost_[j] -= f * at(r, j);
    }
    basis_[r] = c;
  }

  // Minimizes over columns with allowed[j]. Returns false when unbounded.
  bool run(const std::vector<bool>& allowed) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && cost_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, *enter) <= 0) continue;
        Rational ratio = rhs(i) / at(i, *enter);
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void drop_row(std::size_t r) {
    for (std::size_t i = r + 1; i < rows_; ++i) {
      for (std::size_t j = 0; j <= cols_; ++j) at(i - 1, j) = at(i, j);
      basis_[i - 1] = basis_[i];
    }
    --rows_;
    a_.resize(rows_ * (cols_ + 1));
    basis_.resize(rows_);
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Result maximize(const Problem& problem) {
  const std::size_t n = problem.num_vars;
  const std::size_t m = problem.constraints.size();

  // Column layout: one column per nonnegative variable or two per free
  // variable, then one slack per inequality, then one artificial per row.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t v = 0; v < n; ++v) {
    pos_col[v] = cols++;
    if (!problem.nonnegative[v]) neg_col[v] = cols++;
  }
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (problem.constraints[i].relation != Relation::kEqual) slack_col[i] = cols++;
  const std::size_t first_artificial = cols;
  cols += m;

  Tableau t(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const Constraint& c = problem.constraints[i];
    assert(c.coeffs.size() == n);
    const bool flip = c.rhs < 0;
    const int sign = flip ? -1 : 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (c.coeffs[v] == 0) continue;
      t.at(i, pos_col[v]) = sign * c.coeffs[v];
      if (neg_col[v] != SIZE_MAX) t.at(i, neg_col[v]) = -sign * c.coeffs[v];
    }
    if (slack_col[i] != SIZE_MAX)
      t.at(i, slack_col[i]) = (c.relation == Relation::kLessEqual ? 1 : -1) * sign;
    t.rhs(i) = sign * c.rhs;
    t.at(i, first_artificial + i) = 1;
    t.basic(i) = first_artificial + i;
  }

  // Phase 1: minimize the sum of artificials.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < first_artificial; ++j) t.cost(j) -= t.at(i, j);
    t.objective() -= t.rhs(i);
  }
  std::vector<bool> allowed(cols, true);
  t.run(allowed);
  Result result;
  if (t.objective() != 0) {
    result.status = Status::kInfeasible;
    return result;
  }
  // Drive remaining artificials out of the basis; rows where that is
  // impossible are redundant.
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basic(i) < first_artificial) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < first_artificial; ++j) {
      if (t.at(i, j) != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.drop_row(i);
    }
  }

  // Phase 2: minimize -objective.
  for (std::size_t j = 0; j <= cols; ++j) t.cost(j) = 0;
  for (std::size_t v = 0; v < n; ++v) {
    t.cost(pos_col[v]) = -problem.objective[v];
    if (neg_col[v] != SIZE_MAX) t.cost(neg_col[v]) = problem.objective[v];
  }
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const std::size_t b = t.basic(i);
    if (t.cost(b) == 0) continue;
    const Rational f = t.cost(b);
    for (std::size_t j = 0; j <= cols; ++j) t.cost(j) -= f * t.at(i, j);
  }
  for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = false;
  if (!t.run(allowed)) {
    result.status = Status::kUnbounded;
    return result;
  }

  RatVector column_value(cols, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) column_value[t.basic(i)] = t.rhs(i);
  result.x.assign(n, Rational(0));
  for (std::size_t v = 0; v < n; ++v) {
    result.x[v] = column_value[pos_col[v]];
    if (neg_col[v] != SIZE_MAX) result.x[v] -= column_value[neg_col[v]];
  }
  result.value = dot(problem.objective, result.x);
  result.status = Status::kOptimal;
  return result;
}

}  // namespace trigrid::lp
