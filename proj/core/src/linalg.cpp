#include "trigrid/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace trigrid::linalg {

RowEchelon rref(RatMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }
std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::vector<RatVector> kernel(const RatMatrix& a) {
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> left_kernel(const RatMatrix& a) { return kernel(a.transposed()); }

std::variant<AffineSolution, InconsistentRows> solve_affine(const RatMatrix& a, const RatVector& b) {
  assert(b.size() == a.rows());
  const std::size_t n = a.cols(), m = a.rows();
  // [A | b | I] tracks the row combinations for the certificate.
  RatMatrix aug(m, n + 1 + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
    aug(i, n + 1 + i) = 1;
  }
  // Eliminate only over the coefficient columns.
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && aug(p, c) == 0) ++p;
    if (p == m) continue;
    aug.swap_rows(p, r);
    const Rational inv = 1 / aug(r, c);
    for (std::size_t j = 0; j < aug.cols(); ++j) aug(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      const Rational f = aug(i, c);
      for (std::size_t j = 0; j < aug.cols(); ++j) aug(i, j) -= f * aug(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (aug(i, n) != 0) {
      RatVector cert(m);
      for (std::size_t k = 0; k < m; ++k) cert[k] = aug(i, n + 1 + k);
      return InconsistentRows{std::move(cert)};
    }
  }
  AffineSolution sol;
  sol.origin.assign(n, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) sol.origin[pivots[k]] = aug(k, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -aug(k, free);
    sol.directions.push_back(std::move(v));
  }
  return sol;
}

namespace {

void axpy(IntVector& target, const Integer& f, const IntVector& source) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= f * source[j];
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row-style HNF over the leading `key_cols` columns of every row; full rows are
// transformed so trailing columns carry the unimodular transform. Returns the
// number of nonzero (in the key block) rows, which come first.
std::size_t hermite_in_place(std::vector<IntVector>& rows, std::size_t key_cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < key_cols && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        axpy(rows[i], floor_div(rows[i][c], rows[r][c]), rows[r]);
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r == rows.size() || rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& z : rows[r]) z = -z;
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i][c] == 0) continue;
      axpy(rows[i], floor_div(rows[i][c], rows[r][c]), rows[r]);
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<IntVector> hermite_basis(std::vector<IntVector> vectors, std::size_t dim) {
  for ([[maybe_unused]] const auto& v : vectors) assert(v.size() == dim);
  const std::size_t r = hermite_in_place(vectors, dim);
  vectors.resize(r);
  return vectors;
}

IntVector reduce_modulo(IntVector v, const std::vector<IntVector>& hnf) {
  for (const auto& row : hnf) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    axpy(v, floor_div(v[p], row[p]), row);
  }
  return v;
}

bool in_lattice(const IntVector& v, const std::vector<IntVector>& hnf) {
  return is_zero(reduce_modulo(v, hnf));
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  // Rows of [A^T | I_n]; unimodular row operations keep the right block a
  // basis transform, so right parts of rows with vanishing left part span
  // ker_Z(A) exactly.
  std::vector<IntVector> rows(n, IntVector(m + n, Integer(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) rows[j][i] = a(i, j);
    rows[j][m + j] = 1;
  }
  const std::size_t r = hermite_in_place(rows, m);
  std::vector<IntVector> basis;
  for (std::size_t i = r; i < n; ++i) {
    assert(std::all_of(rows[i].begin(), rows[i].begin() + m, [](const Integer& z) { return z == 0; }));
    basis.emplace_back(rows[i].begin() + m, rows[i].end());
  }
  return hermite_basis(std::move(basis), n);
}

std::optional<Integer> lattice_index(const std::vector<IntVector>& sub, const std::vector<IntVector>& super) {
  if (sub.size() != super.size()) return std::nullopt;
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    std::size_t ps = 0, pp = 0;
    while (sub[i][ps] == 0) ++ps;
    while (super[i][pp] == 0) ++pp;
    if (ps != pp) return std::nullopt;
    num *= sub[i][ps];
    den *= super[i][pp];
  }
  if (num % den != 0) return std::nullopt;
  return Integer(num / den);
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  return g;
}

IntVector primitive_integer(const RatVector& v) {
  const Integer l = lcm_of_denominators(v);
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * l;
    out[i] = scaled.get_num();
  }
  const Integer g = gcd_of(out);
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

}  // namespace trigrid::linalg
