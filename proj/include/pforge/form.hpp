#pragma once

#include "pforge/graded.hpp"
#include "pforge/multivector.hpp"

namespace pforge {

/// Pairing and contraction follow the determinant convention
/// <dx_I, d_J> = delta_IJ on increasing tuples, and (i_u a)(y) = a(u ^ y).
/// Consequently i_u(i_v a) = i_{v^u} a.

Form form_wedge(const Form& a, const Form& b);

/// f -> sum_i d_i f dx_i, extended by d(f dx_I) = df ^ dx_I.
Form form_d(const Form& a);

/// Contraction; grade-excess when |u| > |a|. A grade-0 u acts by multiplication.
Form interior(const Multivector& u, const Form& a);

/// Contraction that returns the zero form (grade 0) instead of failing on
/// grade excess, matching i_X = 0 on functions.
Form interior_or_zero(const Multivector& u, const Form& a);

/// <a, u> for equal grades.
Poly pair(const Form& a, const Multivector& u);

/// {f, g} = <df ^ dg, p>.
Poly poisson_bracket(const Multivector& p, const Poly& f, const Poly& g);

/// Koszul-Brylinski operator i_p d - d i_p. With require_involutive the
/// call fails (precondition) unless [p,p] = 0. Functions map to zero.
Form delta(const Multivector& p, const Form& a, bool require_involutive = false);

/// Independent expansion of delta on each a0 dx_{i1} ^ .. ^ dx_{ik}:
///   sum_i (-1)^{i+1} {a0, x_i} dx_1..^dx_i..dx_k
///   + sum_{i<j} (-1)^{i+j} a0 d{x_i, x_j} ^ dx_1..^dx_i..^dx_j..dx_k
Form delta_coordinate(const Multivector& p, const Form& a);

/// [a, b] = delta(a) ^ b + (-1)^{|a|} a ^ delta(b) - delta(a ^ b).
Form form_bracket(const Multivector& p, const Form& a, const Form& b);

/// Same bracket through P(a, b) = i_p(a^b) - i_p(a)^b - a^i_p(b):
///   [a, b] = d P(a, b) - P(da, b) - (-1)^{|a|} P(a, db).
Form form_bracket_pairing(const Multivector& p, const Form& a, const Form& b);

/// w([u,v]) - [(-1)^{(|u|+1)|v|} (d i_v w)(u) + (-1)^{|u|} (d i_u w)(v) - (dw)(u^v)].
/// Zero for every input; the bracket on the left is the coordinate Schouten bracket.
Poly schouten_identity_eval(const Form& w, const Multivector& u, const Multivector& v);

/// p~ : forms -> multivectors, f dx_{i1}^..^dx_{ik} -> f X_{i1}^..^X_{ik} with
/// X_i = [p, x_i] = {x_i, .}. Identity on functions.
Multivector sharp(const Multivector& p, const Form& a);

/// L_X = i_X d + d i_X.
Form lie_derivative(const Multivector& x, const Form& a);

}  // namespace pforge
