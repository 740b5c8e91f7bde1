#pragma once

#include <string>

#include "pforge/linalg.hpp"

namespace pforge {

/// Finite-dimensional Lie algebra, [e_i, e_j] = sum_k c[i][j][k] e_k.
struct LieAlgebraSC {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::vector<Vector>> c;

  explicit LieAlgebraSC(std::size_t d = 0, std::string label = {});

  void set(std::size_t i, std::size_t j, const Vector& v);  // also sets [e_j, e_i] = -v
  Vector bracket(const Vector& x, const Vector& y) const;
  /// ad_x as a matrix acting on coordinates.
  Matrix ad(const Vector& x) const;
  Vector basis(std::size_t i) const;

  /// Fails with invariant-violation naming the first antisymmetry or Jacobi defect.
  void validate() const;
};

/// Twenty small Lie algebras (dimensions 1 to 4) used for sweeps.
std::vector<LieAlgebraSC> lie_catalog();

/// {0}, the coordinate subspaces closed under the bracket, and L itself,
/// each as a list of basis vectors.
std::vector<std::vector<Vector>> coordinate_subalgebras(const LieAlgebraSC& g);

}  // namespace pforge
