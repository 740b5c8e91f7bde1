#pragma once

#include <optional>
#include <string>

#include "pforge/algebra.hpp"
#include "pforge/graded.hpp"
#include "pforge/lie.hpp"

namespace pforge {

/// Antisymmetric multilinear map V^k -> V on a small space. Only values on
/// strictly increasing basis tuples are stored; other tuples are read with
/// the permutation sign (zero on repeats).
class MultiMap {
 public:
  MultiMap() = default;
  MultiMap(std::size_t dim, std::size_t arity);

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }

  /// Value on any index tuple.
  Vector value(const IndexTuple& args) const;
  /// Stored value on an increasing tuple.
  const Vector& at(const IndexTuple& sorted) const;
  void set(const IndexTuple& sorted, Vector v);
  /// Stored tuples in lexicographic order, parallel to the value table.
  std::vector<IndexTuple> tuples() const { return index_tuples(dim_, arity_); }
  const std::vector<Vector>& table() const { return table_; }

  bool is_zero() const;
  MultiMap& operator+=(const MultiMap& rhs);
  friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
  friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a += -b; }
  MultiMap operator-() const;
  friend MultiMap operator*(const Rational& q, MultiMap m);
  friend bool operator==(const MultiMap&, const MultiMap&) = default;

  /// Arity-0 map holding a single vector.
  static MultiMap vector(const Vector& v);

 private:
  std::size_t position(const IndexTuple& sorted) const;
  std::size_t dim_ = 0;
  std::size_t arity_ = 0;
  std::vector<Vector> table_;
};

/// (a o b)(x_1..x_{m+n-1}) = sum over (n, m-1) shuffles s of
/// sgn(s) a(b(x_s1..x_sn), x_s(n+1)..). Zero when a has arity 0.
MultiMap comp_product(const MultiMap& a, const MultiMap& b);

/// [a, b] = (-1)^{(m+1)n} a o b + (-1)^m b o a.
MultiMap supercomm(const MultiMap& a, const MultiMap& b);

/// [a, b] - (-1)^{mn} [b, a] for arities m, n; zero by graded symmetry.
MultiMap symmetry_defect(const MultiMap& a, const MultiMap& b);
/// Signed cyclic sum (-1)^{mk} [[a,b],c] + (-1)^{mn} [[b,c],a] + (-1)^{nk} [[c,a],b].
/// Callers skip triples where two arities are 0 (the inner bracket of two
/// vectors has no arity).
MultiMap jacobi_defect(const MultiMap& a, const MultiMap& b, const MultiMap& c);

/// [mu, a]; fails with non-involutive unless [mu, mu] = 0.
MultiMap dmu(const MultiMap& mu, const MultiMap& a);

/// Bracket tensor of a Lie algebra, mu(e_i, e_j) = [e_i, e_j].
MultiMap lie_tensor(const LieAlgebraSC& g);

/// Chevalley-Eilenberg differential of an arity-k cochain with values in
/// the adjoint module:
///   (d c)(x_0..x_k) = sum_i (-1)^i [x_i, c(..^x_i..)]
///                   + sum_{i<j} (-1)^{i+j} c([x_i, x_j], ..^x_i..^x_j..)
MultiMap chevalley_eilenberg(const LieAlgebraSC& g, const MultiMap& c);

/// Action of a multivector on Q[x_0..x_{n-1}] / (x)^order as a multilinear
/// map, u(f_1..f_k) = sum_I u_I det[d_{I_a} f_b]. The basis of the
/// quotient is all monomials of degree < order in graded order. Fails with
/// non-descending unless every coefficient is homogeneous of degree = grade.
MultiMap truncated_action(const Multivector& u, unsigned order);

using FiniteAlgebra = AlgebraSC;

struct KoszulReport {
  bool passed = true;
  std::size_t der_dim = 0;
  std::size_t diff_dim = 0;              // dim Diff^1(A), equals der_dim + dim A
  std::vector<std::size_t> form_dims;    // dim of the A-form spaces, grade 0..max_grade
  std::string counterexample;            // empty when passed
};

/// Builds Diff^1(A) = Der(A) + A inside End(A), the commutator tensor mu on
/// it, and the spaces of A-valued, A-multilinear maps vanishing on A; then
/// checks [mu, w] = -d w on a basis of each space, grades 0..max_grade.
KoszulReport koszul_check(const FiniteAlgebra& a, std::size_t max_grade = 2);

}  // namespace pforge
