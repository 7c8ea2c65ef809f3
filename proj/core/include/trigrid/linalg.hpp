#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "trigrid/matrix.hpp"
#include "trigrid/rational.hpp"

namespace trigrid::linalg {

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

// Basis of {x : A x = 0}, one vector per free column of the RREF.
std::vector<RatVector> kernel(const RatMatrix& a);

// Basis of {y : y^T A = 0}.
std::vector<RatVector> left_kernel(const RatMatrix& a);

struct AffineSolution {
  RatVector origin;
  std::vector<RatVector> directions;
};

// y with y^T A = 0 and y^T b != 0.
struct InconsistentRows {
  RatVector certificate;
};

std::variant<AffineSolution, InconsistentRows> solve_affine(const RatMatrix& a, const RatVector& b);

// Canonical row-style Hermite normal form of the lattice spanned by `vectors`
// (all of length `dim`): nonzero rows only, pivots positive, entries above a
// pivot reduced into [0, pivot).
std::vector<IntVector> hermite_basis(std::vector<IntVector> vectors, std::size_t dim);

// Canonical representative of v modulo the lattice with HNF basis `hnf`.
// Zero exactly when v lies in the lattice.
IntVector reduce_modulo(IntVector v, const std::vector<IntVector>& hnf);

bool in_lattice(const IntVector& v, const std::vector<IntVector>& hnf);

// Z-basis (in Hermite form) of {x in Z^n : A x = 0}. The result spans the full
// rational kernel, i.e. the lattice is saturated.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

// Index [super : sub] for lattices of equal rank given in Hermite form, or
// nullopt if the ranks or pivot columns differ.
std::optional<Integer> lattice_index(const std::vector<IntVector>& sub, const std::vector<IntVector>& super);

// Scales a rational vector to a primitive integer vector (gcd 1, same direction).
IntVector primitive_integer(const RatVector& v);

Integer gcd_of(const IntVector& v);

}  // namespace trigrid::linalg
