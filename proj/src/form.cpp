#include "pforge/form.hpp"

namespace pforge {

Form form_wedge(const Form& a, const Form& b) { return wedge(a, b); }

Form form_d(const Form& a) {
  const std::size_t n = a.nvars();
  Form out(n, a.grade() + 1);
  for (const auto& [idx, f] : a.terms())
    for (std::size_t i = 0; i < n; ++i) {
      Poly c = f.diff(i);
      if (c.is_zero()) continue;
      IndexTuple t{i};
      t.insert(t.end(), idx.begin(), idx.end());
      out.add_unsorted(std::move(t), c);
    }
  return out;
}

namespace {

/// For J subset of K (both increasing): returns sign with dx_K = sign dx_J ^ dx_{K\J}.
int split_sign(const IndexTuple& j, const IndexTuple& k, IndexTuple& rest) {
  rest.clear();
  std::size_t a = 0;
  for (std::size_t b = 0; b < k.size(); ++b) {
    if (a < j.size() && j[a] == k[b])
      ++a;
    else
      rest.push_back(k[b]);
  }
  if (a != j.size()) return 0;
  return merge_tuples(j, rest).first;
}

}  // namespace

Form interior(const Multivector& u, const Form& a) {
  if (u.nvars() != a.nvars()) fail("dimension-mismatch", "interior product over different rings");
  if (u.grade() > a.grade()) fail("grade-excess", "contraction grade exceeds form grade");
  Form out(a.nvars(), a.grade() - u.grade());
  IndexTuple rest;
  for (const auto& [iu, g] : u.terms())
    for (const auto& [ia, f] : a.terms()) {
      int s = split_sign(iu, ia, rest);
      if (s == 0) continue;
      Poly c = g * f;
      out.add_term(rest, s > 0 ? c : -c);
    }
  return out;
}

Form interior_or_zero(const Multivector& u, const Form& a) {
  if (u.grade() > a.grade()) return Form(a.nvars(), 0);
  return interior(u, a);
}

Poly pair(const Form& a, const Multivector& u) {
  if (a.nvars() != u.nvars()) fail("dimension-mismatch", "pairing over different rings");
  if (a.grade() != u.grade()) fail("grade-mismatch", "pairing needs equal grades");
  Poly out(a.nvars());
  for (const auto& [idx, f] : a.terms()) {
    auto it = u.terms().find(idx);
    if (it != u.terms().end()) out += f * it->second;
  }
  return out;
}

Poly poisson_bracket(const Multivector& p, const Poly& f, const Poly& g) {
  if (p.grade() != 2) fail("grade-mismatch", "the Poisson tensor must be a bivector");
  if (p.nvars() != f.nvars() || p.nvars() != g.nvars())
    fail("dimension-mismatch", "bracket arguments over different rings");
  Poly out(p.nvars());
  for (const auto& [idx, c] : p.terms()) {
    const std::size_t i = idx[0], j = idx[1];
    out += c * (f.diff(i) * g.diff(j) - f.diff(j) * g.diff(i));
  }
  return out;
}

Form delta(const Multivector& p, const Form& a, bool require_involutive) {
  if (p.grade() != 2) fail("grade-mismatch", "the Poisson tensor must be a bivector");
  if (p.nvars() != a.nvars()) fail("dimension-mismatch", "bivector and form over different rings");
  if (require_involutive && !jacobiator(p).is_zero())
    fail("non-involutive", "[p,p] != 0", ErrorClass::precondition);
  if (a.grade() == 0) return Form(a.nvars(), 0);
  Form out = interior(p, form_d(a));
  if (a.grade() >= 2) out -= form_d(interior(p, a));
  return out;
}

Form delta_coordinate(const Multivector& p, const Form& a) {
  const std::size_t n = a.nvars();
  const std::size_t k = a.grade();
  if (k == 0) return Form(n, 0);
  Form out(n, k - 1);
  for (const auto& [idx, a0] : a.terms()) {
    for (std::size_t i = 0; i < k; ++i) {
      Poly br = poisson_bracket(p, a0, Poly::variable(n, idx[i]));
      if (i % 2) br = -br;  // (-1)^{i+1} with 1-based i
      out.add_term(erase_at(idx, i), br);
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        Poly br = poisson_bracket(p, Poly::variable(n, idx[i]), Poly::variable(n, idx[j]));
        if (br.is_zero()) continue;
        IndexTuple rest;
        for (std::size_t t = 0; t < k; ++t)
          if (t != i && t != j) rest.push_back(idx[t]);
        Form tail = Form::basis(n, rest, a0);
        Form term = wedge(form_d(Form::scalar(br)), tail);
        if ((i + j) % 2) term = -term;  // (-1)^{i+j}, 1-based indices shift both
        out += term;
      }
  }
  return out;
}

namespace {

Form zero_like(std::size_t n, std::size_t grade) { return Form(n, grade); }

Form minus_one_pow(std::size_t e, Form f) { return e % 2 ? -f : f; }

/// delta that returns a form of the requested grade even when the input is a function.
Form delta_to(const Multivector& p, const Form& a) {
  return a.grade() == 0 ? zero_like(a.nvars(), 0) : delta(p, a);
}

}  // namespace

Form form_bracket(const Multivector& p, const Form& a, const Form& b) {
  if (a.nvars() != b.nvars()) fail("dimension-mismatch", "bracket of forms over different rings");
  const std::size_t n = a.nvars();
  const std::size_t g = a.grade() + b.grade();
  if (g == 0) return Form(n, 0);
  Form out(n, g - 1);
  if (a.grade() > 0) out += wedge(delta_to(p, a), b);
  if (b.grade() > 0) out += minus_one_pow(a.grade(), wedge(a, delta_to(p, b)));
  out -= delta(p, wedge(a, b));
  return out;
}

namespace {

/// P(a, b) = i_p(a^b) - i_p(a)^b - a^i_p(b), grade |a|+|b|-2 (zero below 0).
Form pairing_p(const Multivector& p, const Form& a, const Form& b, std::size_t n) {
  const std::size_t g = a.grade() + b.grade();
  if (g < 2) return Form(n, 0);
  Form out = interior(p, wedge(a, b));
  if (a.grade() >= 2) out -= wedge(interior(p, a), b);
  if (b.grade() >= 2) out -= wedge(a, interior(p, b));
  return out;
}

}  // namespace

Form form_bracket_pairing(const Multivector& p, const Form& a, const Form& b) {
  if (a.nvars() != b.nvars()) fail("dimension-mismatch", "bracket of forms over different rings");
  const std::size_t n = a.nvars();
  const std::size_t g = a.grade() + b.grade();
  if (g == 0) return Form(n, 0);
  Form out(n, g - 1);
  // d P(a,b) lives in grade g-1 only when g >= 2.
  if (g >= 2) out += form_d(pairing_p(p, a, b, n));
  out -= pairing_p(p, form_d(a), b, n);
  out -= minus_one_pow(a.grade(), pairing_p(p, a, form_d(b), n));
  return out;
}

Poly schouten_identity_eval(const Form& w, const Multivector& u, const Multivector& v) {
  const std::size_t m = u.grade(), k = v.grade();
  if (m + k == 0 || w.grade() + 1 != m + k)
    fail("grade-mismatch", "need |w| = |u| + |v| - 1");
  Poly lhs = pair(w, schouten(u, v));
  // A contraction of grade above |w| vanishes.
  Poly t1(w.nvars()), t2(w.nvars());
  if (k <= w.grade()) t1 = pair(form_d(interior(v, w)), u);
  if (((m + 1) * k) % 2) t1 = -t1;
  if (m <= w.grade()) t2 = pair(form_d(interior(u, w)), v);
  if (m % 2) t2 = -t2;
  Poly t3 = pair(form_d(w), wedge(u, v));
  return lhs - (t1 + t2 - t3);
}

Multivector sharp(const Multivector& p, const Form& a) {
  if (p.grade() != 2) fail("grade-mismatch", "the Poisson tensor must be a bivector");
  if (p.nvars() != a.nvars()) fail("dimension-mismatch", "bivector and form over different rings");
  const std::size_t n = a.nvars();
  std::vector<Multivector> ham;
  ham.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    ham.push_back(schouten(p, Multivector::scalar(Poly::variable(n, i))));
  Multivector out(n, a.grade());
  for (const auto& [idx, f] : a.terms()) {
    Multivector w = Multivector::scalar(f);
    for (std::size_t i : idx) w = wedge(w, ham[i]);
    out += w;
  }
  return out;
}

Form lie_derivative(const Multivector& x, const Form& a) {
  if (x.grade() != 1) fail("grade-mismatch", "Lie derivative needs a vector field");
  Form out = interior(x, form_d(a));
  if (a.grade() >= 1) out += form_d(interior(x, a));
  return out;
}

}  // namespace pforge
