#pragma once

#include "fpcat/matrix.hpp"

#include <optional>
#include <vector>

namespace fpcat {

struct HermiteResult {
  Matrix h;  ///< row echelon form
  Matrix u;  ///< transform with u * m = h
};

/// Row Hermite normal form.
///
/// Over Z: u is unimodular, h has the same shape as m, pivots are positive
/// and entries above a pivot lie in [0, pivot).
/// Over Z/n: h is the Z-Hermite form of the lattice rowspace(m) + nZ^cols
/// reduced mod n, keeping only rows whose pivot is a proper divisor of n; u
/// satisfies u * m = h mod n.
/// Over Q: reduced row echelon form with invertible u.
HermiteResult hnf(const Matrix& m);

struct SmithResult {
  Matrix s;  ///< diagonal, d_1 | d_2 | ..., d_i >= 0
  Matrix u;
  Matrix v;  ///< u * m * v = s, u and v unimodular
};

/// Smith normal form over Z.
SmithResult snf(const Matrix& m);

/// Nonzero diagonal entries of the Smith form (over Z), in divisibility order.
std::vector<mpz_class> elementary_divisors(const Matrix& m);

/// x with x * a = b, or nothing when the system has no solution over the ring.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

/// x with a * x = b.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

/// Generators (as rows) of { x : x * a = 0 }. May contain redundant rows.
Matrix row_syzygies(const Matrix& a);

/// Generators (as columns) of { x : a * x = 0 }.
Matrix column_syzygies(const Matrix& a);

}  // namespace fpcat
