#pragma once

#include <optional>
#include <string>

#include "pforge/linalg.hpp"

namespace pforge {

/// Finite-dimensional associative algebra, e_i e_j = sum_k mult[i][j][k] e_k.
struct AlgebraSC {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::vector<Vector>> mult;
  std::optional<Vector> unit;

  explicit AlgebraSC(std::size_t d = 0, std::string label = {});

  Vector mul(const Vector& x, const Vector& y) const;
  Matrix left(const Vector& x) const;   // y -> x y
  Matrix right(const Vector& x) const;  // y -> y x
  Vector basis(std::size_t i) const;
  bool is_commutative() const;

  /// Fails with non-associative (witness "i,j,k") or invariant-violation
  /// for a bad unit.
  void validate() const;
};

/// Basis of Der(A) as matrices (column j = D(e_j)), from the kernel of the
/// linearized Leibniz system D(ab) - D(a)b - aD(b) = 0.
std::vector<Matrix> derivation_basis(const AlgebraSC& a);

/// Flattening used for spaces of endomorphisms: entry (r, c) -> r*dim + c.
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t dim);

/// Q[x_1..x_r]/(x_1^{e_1}, .., x_r^{e_r}) on the monomial basis, exponents
/// ordered lexicographically with the first variable slowest.
AlgebraSC truncated_polynomial_algebra(const std::vector<unsigned>& exponents,
                                       std::string name = {});

/// Q^k with componentwise product.
AlgebraSC product_of_fields(std::size_t k);

/// M_k(Q) on matrix units E_ij, index i*k + j.
AlgebraSC matrix_algebra(std::size_t k);

}  // namespace pforge
