#pragma once

#include <optional>
#include <string>

#include "pforge/form.hpp"
#include "pforge/lie.hpp"
#include "pforge/linalg.hpp"

namespace pforge {

/// Lie-Poisson structure on the dual of g: {x_i, x_j} = sum_k c_ij^k x_k.
Multivector lie_poisson(const LieAlgebraSC& g);

/// X_f = sharp(p, df) = [p, f].
Multivector hamiltonian(const Multivector& p, const Poly& f);

/// {f, g} = <df ^ dg, p>.
Poly pbracket(const Multivector& p, const Poly& f, const Poly& g);

/// Constant bivector p(x) as an antisymmetric matrix, P_ij = {x_i, x_j}(x).
Matrix bivector_at(const Multivector& p, const Vector& point);

struct PointReport {
  Vector point;
  std::size_t rank = 0;
  std::vector<Vector> image_basis;  // spans pi(x) = image of sharp at x
};

/// Rank by the wedge-power criterion, cross-checked against the matrix rank.
PointReport rank_at(const Multivector& p, const Vector& point);

/// Largest k with (p(x))^k != 0, times two.
std::size_t wedge_power_rank(const Multivector& p, const Vector& point);

bool is_casimir(const Multivector& p, const Poly& f);

/// Basis of Casimir polynomials of degree <= max_degree, as the reduced
/// kernel of f -> X_f on the monomial coefficient space.
std::vector<Poly> casimir_basis(const Multivector& p, unsigned max_degree);

struct IntegrabilityReport {
  bool integrable = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // coordinate pair (i, j)
  Vector bracket_value;  // [X_{x_i}, X_{x_j}](x) for the witness
};

IntegrabilityReport integrability_at(const Multivector& p, const Vector& point);

struct CocycleReport {
  std::vector<std::vector<Poly>> c;
  bool antisymmetric = true;
  bool constant = true;
  /// Cyclic identity on constant-valued cocycles; unset otherwise.
  std::optional<bool> cyclic_zero;
  /// Whether [X_{l(e_i)}, X_{l(e_j)}] = X_{l([e_i, e_j])} for all pairs.
  bool homomorphic = true;
};

/// c[i][j] = l([e_i, e_j]) - {l(e_i), l(e_j)}.
CocycleReport momentum_cocycle(const Multivector& p, const LieAlgebraSC& g,
                               const std::vector<Poly>& lambda);

enum class IdealVerdict { poisson, refuted, undecided };
std::string to_string(IdealVerdict v);

struct IdealObligation {
  std::size_t generator = 0;
  std::size_t coordinate = 0;
  Poly bracket;
  std::optional<std::vector<Poly>> multipliers;  // bracket = sum h_k g_k
  std::string reason;                            // for failed obligations
  std::optional<Vector> point;                   // common zero where bracket != 0
};

struct IdealReport {
  IdealVerdict verdict = IdealVerdict::poisson;
  std::vector<IdealObligation> obligations;
};

/// Checks {g_i, x_j} in (g_1..g_r) with multipliers of degree <= degree_bound.
IdealReport ideal_check(const Multivector& p, const std::vector<Poly>& gens,
                        unsigned degree_bound);

/// h_k with deg h_k <= bound and target = sum h_k g_k, if any.
std::optional<std::vector<Poly>> bounded_membership(const Poly& target,
                                                    const std::vector<Poly>& gens,
                                                    unsigned bound);

}  // namespace pforge
