#pragma once

#include "pforge/form.hpp"
#include "pforge/linalg.hpp"

namespace pforge {

/// Constant nondegenerate bivector with its symplectic form.
///
/// With P_ij = {x_i, x_j}, the form has matrix P^{-1}; this is the choice
/// for which {f,g} w^m = m dg ^ df ^ w^{m-1}. For d0^d1 this gives
/// w = -dx0^dx1. vol = w^m / m!.
struct SymplecticContext {
  std::size_t n = 0;
  Multivector p;
  Matrix p_matrix;
  Form omega;
  Form vol;
  Rational vol_coeff;  // vol = vol_coeff * dx_0 ^ .. ^ dx_{n-1}
};

/// Errors: non-constant, odd-dimension, degenerate-bivector (all precondition).
SymplecticContext make_context(const Multivector& p);

/// <a, b>_k = sum_{I,J} a_I b_J det(P[J, I]), extended over coefficients.
Poly star_pairing(const SymplecticContext& ctx, const Form& a, const Form& b);

/// b ^ *a = <b, a>_k vol for every b of grade k.
Form star(const SymplecticContext& ctx, const Form& a);

/// Construction through contractions: *(f dx_I) = f i_{sharp(dx_I)} vol,
/// i.e. f (i_{X_{ik}} o .. o i_{X_{i1}})(vol) with X_a = [p, a].
Form star_contraction(const SymplecticContext& ctx, const Form& a);

/// w^k (k-fold wedge, w^0 = 1).
Form form_power(const Form& w, std::size_t k);

}  // namespace pforge
