#pragma once

#include <optional>
#include <string>

#include "pforge/algebra.hpp"
#include "pforge/lie.hpp"

namespace pforge {

/// Linearly independent coordinate vectors spanning a subspace.
using Subspace = std::vector<Vector>;
/// Derivations and other endomorphisms as matrices, column j = X(e_j).
using EndoList = std::vector<Matrix>;

struct AlgebraReport {
  Subspace center;
};

/// Validates associativity and unit; reports the center.
AlgebraReport validate_algebra(const AlgebraSC& a);

Subspace center(const AlgebraSC& a);

struct DerivationReport {
  EndoList basis;
  EndoList inner;  // basis of span{ad_a}
  bool all_inner = false;
  bool closed = true;  // commutators stay in Der(A)
};

DerivationReport derivations(const AlgebraSC& a);

/// Commutator of endomorphisms.
Matrix commutator(const Matrix& x, const Matrix& y);

/// Coordinates of `e` in the span of `basis`, if it lies there.
std::optional<Vector> endo_coordinates(const EndoList& basis, const Matrix& e);

/// Echelon basis of the span of a list of endomorphisms.
EndoList endo_span(const EndoList& list, std::size_t dim);

bool same_span(const EndoList& a, const EndoList& b, std::size_t dim);

/// Fails with not-an-ideal / not-a-subalgebra and a witness "i,j".
void require_ideal(const AlgebraSC& a, const Subspace& ideal);
void require_subalgebra(const AlgebraSC& a, const Subspace& sub);

/// A/I on a complement of I built from standard basis vectors.
struct Quotient {
  AlgebraSC algebra;
  Subspace complement;  // lifts of the quotient basis
  Matrix projection;    // dim(A/I) x dim(A), a -> q(a)
};

Quotient quotient_algebra(const AlgebraSC& a, const Subspace& ideal);

/// The subalgebra B as an algebra on its own basis.
AlgebraSC subalgebra(const AlgebraSC& a, const Subspace& sub);

struct IdealDerivations {
  EndoList der_i;    // X(I) in I
  EndoList der_i0;   // X(A) in I
  EndoList target;   // basis of Der(A/I)
  Matrix r;          // dim target x dim der_i, r_I in coordinates
  std::size_t rank = 0;
  bool kernel_matches = true;  // ker r_I = Der_I(A)_0
};

IdealDerivations ideal_derivations(const AlgebraSC& a, const Subspace& ideal);

struct SubmanifoldReport {
  bool submanifold = false;
  std::size_t rank = 0;
  std::size_t target_dim = 0;
};

SubmanifoldReport submanifold_check(const AlgebraSC& a, const Subspace& ideal);

struct QuotientReport {
  bool q1 = false, q2 = false, q3 = false;
  EndoList q_b, v_b;
  Subspace center_b, b_cap_center;
  Subspace invariants;  // joint kernel of V_B
  std::size_t der_b_dim = 0;
  std::size_t restriction_rank = 0;
};

QuotientReport quotient_check(const AlgebraSC& a, const Subspace& sub);

struct CurvatureEntry {
  std::size_t i = 0, j = 0;
  Matrix value;  // [s(X_i), s(X_j)] - s([X_i, X_j]) on A
};

struct CurvatureReport {
  EndoList der_b;  // r_B(s_i), the basis of Der(B) the lifts are indexed by
  std::vector<CurvatureEntry> entries;  // all pairs i < j
  bool flat = true;
  std::optional<bool> compatible;  // [g, s(x)] = 0 when g was supplied
};

/// `lifts` are s(X_i); their restrictions to B must form a basis of Der(B).
CurvatureReport splitting_curvature(const AlgebraSC& a, const Subspace& sub, const EndoList& lifts,
                                    const EndoList* g = nullptr);

struct ActionReport {
  EndoList v_g;   // Z(A)-span of g
  Subspace b_g;   // joint kernel of V^g
  EndoList q_g;   // {xi : [V^g, xi] in V^g}
  EndoList q_b, v_b;
  bool lemma_holds = false;         // Q^g in Q_{B^g}
  bool v_equal = false;             // V^g = V_{B^g}
  std::optional<bool> prop_holds;   // Q^g = Q_{B^g} when v_equal
};

/// g must consist of derivations of A.
ActionReport action_check(const AlgebraSC& a, const EndoList& g);

struct ConnectionTable {
  Subspace module_basis;               // lifts (quotient) or covectors (annihilator)
  std::vector<Matrix> nabla;           // one per acting basis element
  std::vector<CurvatureEntry> curvature;
  bool flat = true;
  bool well_defined = true;
};

/// Connection q(u) -> q([X, u]) on L/L0 for X in L0.
ConnectionTable bott_quotient(const LieAlgebraSC& l, const Subspace& l0);

/// nabla_X a = i_X d a = -a([X, .]) on the annihilator of L0, X in L0.
ConnectionTable bott_forms(const LieAlgebraSC& l, const Subspace& l0);

struct IntegralReport {
  bool integral = false;
  std::string reason;
  std::size_t forms_dim = 0;          // Omega^1(A)
  std::size_t forms_d_dim = 0;        // Omega^1_D(A)
  std::size_t forms_i_cap_dim = 0;    // Omega^1_D(A) n Omega^1(A, I)
  Subspace gamma;                     // lifts of a basis of Gamma(D, I), values on Der(A) basis
  EndoList acting;                    // lifts of a basis of D / D_I
  ConnectionTable table;
};

/// Bott connection on Gamma(D, I) for D a Lie subalgebra of Der(A).
IntegralReport bott_integral(const AlgebraSC& a, const EndoList& d, const Subspace& ideal);

/// Finite-dimensional Poisson bracket {e_i, e_j} = sum_k p[i][j][k] e_k.
bool is_poisson_ideal(const AlgebraSC& a, const std::vector<std::vector<Vector>>& p,
                      const Subspace& ideal);

/// Ideals spanned by subsets of the standard basis.
std::vector<Subspace> coordinate_ideals(const AlgebraSC& a);

}  // namespace pforge
