#include "pforge/symplectic.hpp"

namespace pforge {

Form form_power(const Form& w, std::size_t k) {
  Form out = Form::scalar(Poly(w.nvars(), Rational(1)));
  for (std::size_t i = 0; i < k; ++i) out = wedge(out, w);
  return out;
}

SymplecticContext make_context(const Multivector& p) {
  if (p.grade() != 2) fail("grade-mismatch", "the Poisson tensor must be a bivector");
  const std::size_t n = p.nvars();
  for (const auto& [idx, c] : p.terms())
    if (!c.is_constant())
      fail("non-constant", "star needs constant coefficients", ErrorClass::precondition,
           c.str());
  if (n % 2) fail("odd-dimension", "symplectic structures need even dimension",
                  ErrorClass::precondition);
  SymplecticContext ctx;
  ctx.n = n;
  ctx.p = p;
  ctx.p_matrix = Matrix(n, n);
  for (const auto& [idx, c] : p.terms()) {
    ctx.p_matrix(idx[0], idx[1]) = c.constant_term();
    ctx.p_matrix(idx[1], idx[0]) = -c.constant_term();
  }
  auto inv = inverse(ctx.p_matrix);
  if (!inv) fail("degenerate-bivector", "bivector matrix is singular", ErrorClass::precondition,
                 "rank " + std::to_string(rank(ctx.p_matrix)) + " of " + std::to_string(n));
  ctx.omega = Form(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ctx.omega.add_term({i, j}, Poly(n, (*inv)(i, j)));
  const std::size_t m = n / 2;
  Rational fact(1);
  for (std::size_t k = 2; k <= m; ++k) fact *= k;
  ctx.vol = Rational(1 / fact) * form_power(ctx.omega, m);
  IndexTuple all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  ctx.vol_coeff = ctx.vol.coeff(all).constant_term();
  return ctx;
}

namespace {

Rational minor_det(const Matrix& m, const IndexTuple& rows, const IndexTuple& cols) {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return determinant(s);
}

IndexTuple complement(const IndexTuple& idx, std::size_t n) {
  IndexTuple out;
  std::size_t a = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a < idx.size() && idx[a] == i)
      ++a;
    else
      out.push_back(i);
  }
  return out;
}

}  // namespace

Poly star_pairing(const SymplecticContext& ctx, const Form& a, const Form& b) {
  a.check_same(b);
  Poly out(ctx.n);
  for (const auto& [ia, fa] : a.terms())
    for (const auto& [ib, fb] : b.terms()) {
      Rational d = minor_det(ctx.p_matrix, ib, ia);
      if (sgn(d) != 0) out += d * (fa * fb);
    }
  return out;
}

Form star(const SymplecticContext& ctx, const Form& a) {
  if (a.nvars() != ctx.n) fail("dimension-mismatch", "form and structure over different rings");
  if (a.grade() > ctx.n) fail("grade-out-of-range", "form grade exceeds dimension");
  const std::size_t k = a.grade();
  Form out(ctx.n, ctx.n - k);
  // Coefficient on dx_{I^c} is sign(I, I^c) <dx_I, a> vol_coeff.
  for (const auto& idx : index_tuples(ctx.n, k)) {
    Poly c = star_pairing(ctx, Form::basis(ctx.n, idx, Poly(ctx.n, Rational(1))), a);
    if (c.is_zero()) continue;
    IndexTuple rest = complement(idx, ctx.n);
    int s = merge_tuples(idx, rest).first;
    Rational factor = s > 0 ? ctx.vol_coeff : Rational(-ctx.vol_coeff);
    out.add_term(rest, factor * c);
  }
  return out;
}

Form star_contraction(const SymplecticContext& ctx, const Form& a) {
  if (a.nvars() != ctx.n) fail("dimension-mismatch", "form and structure over different rings");
  return interior(sharp(ctx.p, a), ctx.vol);
}

}  // namespace pforge
