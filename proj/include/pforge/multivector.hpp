#pragma once

#include "pforge/graded.hpp"

namespace pforge {

/// Sign convention (used everywhere in the library):
///
///   {f, g} = p(df, dg) = <df ^ dg, p>,      [p, f](g) = {f, g}
///
/// where <dx_I, d_J> = delta_IJ on increasing tuples. The Schouten bracket
/// is the supercommutator restricted to wedges of vector fields:
///
///   [u1^..^um, v1^..^vn] = sum_{i,j} (-1)^{m+i+j-1} [ui,vj] ^ u1..^ui..um ^ v1..^vj..vn
///
/// extended to functions by [X, f] = X(f) and graded symmetry
/// [u, v] = (-1)^{|u||v|} [v, u]. With this normalization the bracket equals
/// (-1)^{|u|-1} times the textbook Schouten-Nijenhuis bracket.

/// u ^ v; errors with dimension-mismatch.
Multivector mv_wedge(const Multivector& u, const Multivector& v);

/// X(f) = sum_i X_i d_i f for a grade-1 field.
Poly apply_vector_field(const Multivector& x, const Poly& f);

/// Lie bracket of vector fields, [X,Y]_i = sum_j (X_j d_j Y_i - Y_j d_j X_i).
Multivector vf_bracket(const Multivector& x, const Multivector& y);

/// Coordinate Schouten bracket, grade |u|+|v|-1. Two functions bracket to
/// zero (returned as the zero function).
Multivector schouten(const Multivector& u, const Multivector& v);

/// d_P(u) = [p, u]; p must be a bivector.
Multivector lichnerowicz_dP(const Multivector& p, const Multivector& u);

/// [p, p]; zero exactly when {.,.} defined by p satisfies Jacobi.
Multivector jacobiator(const Multivector& p);

/// Bivector from an antisymmetric coefficient table P[i][j] = {x_i, x_j}.
Multivector bivector_from_matrix(const std::vector<std::vector<Poly>>& table);

}  // namespace pforge
