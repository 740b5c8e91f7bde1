#include "pforge/analysis.hpp"

#include <map>

namespace pforge {

Multivector lie_poisson(const LieAlgebraSC& g) {
  Multivector p(g.dim, 2);
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j) {
      Poly c(g.dim);
      for (std::size_t k = 0; k < g.dim; ++k)
        if (sgn(g.c[i][j][k]) != 0) c += Poly::variable(g.dim, k) * Poly(g.dim, g.c[i][j][k]);
      p.add_term({i, j}, c);
    }
  return p;
}

Multivector hamiltonian(const Multivector& p, const Poly& f) {
  return sharp(p, form_d(Form::scalar(f)));
}

Poly pbracket(const Multivector& p, const Poly& f, const Poly& g) {
  return poisson_bracket(p, f, g);
}

Matrix bivector_at(const Multivector& p, const Vector& point) {
  if (p.grade() != 2) fail("grade-mismatch", "the Poisson tensor must be a bivector");
  if (point.size() != p.nvars()) fail("dimension-mismatch", "point has the wrong length");
  const std::size_t n = p.nvars();
  Matrix m(n, n);
  for (const auto& [idx, c] : p.terms()) {
    Rational v = c.eval(point);
    m(idx[0], idx[1]) = v;
    m(idx[1], idx[0]) = -v;
  }
  return m;
}

std::size_t wedge_power_rank(const Multivector& p, const Vector& point) {
  const std::size_t n = p.nvars();
  Matrix m = bivector_at(p, point);
  Multivector px(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) px.add_term({i, j}, Poly(n, m(i, j)));
  Multivector power = Multivector::scalar(Poly(n, Rational(1)));
  std::size_t k = 0;
  while (2 * (k + 1) <= n) {
    Multivector next = wedge(power, px);
    if (next.is_zero()) break;
    power = std::move(next);
    ++k;
  }
  return 2 * k;
}

PointReport rank_at(const Multivector& p, const Vector& point) {
  PointReport r;
  r.point = point;
  Matrix m = bivector_at(p, point);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  r.image_basis = span_basis(rows, p.nvars());
  r.rank = r.image_basis.size();
  std::size_t w = wedge_power_rank(p, point);
  if (w != r.rank)
    fail("invariant-violation", "wedge-power rank " + std::to_string(w) + " != matrix rank " +
                                    std::to_string(r.rank));
  return r;
}

bool is_casimir(const Multivector& p, const Poly& f) { return hamiltonian(p, f).is_zero(); }

namespace {

struct ComponentLess {
  bool operator()(const std::pair<std::size_t, Monomial>& a,
                  const std::pair<std::size_t, Monomial>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return GrlexLess{}(a.second, b.second);
  }
};

}  // namespace

std::vector<Poly> casimir_basis(const Multivector& p, unsigned max_degree) {
  const std::size_t n = p.nvars();
  std::vector<Monomial> mons;
  for (unsigned d = 0; d <= max_degree; ++d)
    for (const auto& m : monomials_of_degree(n, d)) mons.push_back(m);
  // Rows: (component, monomial) pairs met in any image.
  std::map<std::pair<std::size_t, Monomial>, std::size_t, ComponentLess> row;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(mons.size());
  for (std::size_t j = 0; j < mons.size(); ++j) {
    Multivector x = hamiltonian(p, Poly::term(mons[j], Rational(1)));
    for (const auto& [idx, c] : x.terms())
      for (const auto& [m, q] : c.terms()) {
        auto [it, _] = row.try_emplace({idx[0], m}, row.size());
        cols[j].emplace_back(it->second, q);
      }
  }
  Matrix a(row.size(), mons.size());
  for (std::size_t j = 0; j < mons.size(); ++j)
    for (const auto& [i, q] : cols[j]) a(i, j) = q;
  std::vector<Poly> out;
  for (const auto& v : kernel(a)) {
    Poly f(n);
    for (std::size_t j = 0; j < mons.size(); ++j)
      if (sgn(v[j]) != 0) f.add_term(mons[j], v[j]);
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

Vector eval_field(const Multivector& x, const Vector& point) {
  Vector v(x.nvars());
  for (const auto& [idx, c] : x.terms()) v[idx[0]] = c.eval(point);
  return v;
}

}  // namespace

IntegrabilityReport integrability_at(const Multivector& p, const Vector& point) {
  const std::size_t n = p.nvars();
  if (point.size() != n) fail("dimension-mismatch", "point has the wrong length");
  std::vector<Multivector> ham;
  for (std::size_t i = 0; i < n; ++i) ham.push_back(hamiltonian(p, Poly::variable(n, i)));
  std::vector<Vector> span;
  for (const auto& x : ham) span.push_back(eval_field(x, point));
  std::vector<Vector> basis = span_basis(span, n);
  IntegrabilityReport r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector b = eval_field(vf_bracket(ham[i], ham[j]), point);
      if (!in_span(basis, b, n)) {
        r.integrable = false;
        r.witness = {{i, j}};
        r.bracket_value = b;
        return r;
      }
    }
  return r;
}

CocycleReport momentum_cocycle(const Multivector& p, const LieAlgebraSC& g,
                               const std::vector<Poly>& lambda) {
  if (lambda.size() != g.dim)
    fail("dimension-mismatch", "lambda must be given on every basis element");
  const std::size_t n = p.nvars();
  const std::size_t m = g.dim;
  auto lam = [&](const Vector& v) {
    Poly out(n);
    for (std::size_t k = 0; k < m; ++k)
      if (sgn(v[k]) != 0) out += v[k] * lambda[k];
    return out;
  };
  CocycleReport r;
  r.c.assign(m, std::vector<Poly>(m, Poly(n)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector br = g.bracket(g.basis(i), g.basis(j));
      r.c[i][j] = lam(br) - pbracket(p, lambda[i], lambda[j]);
      if (!r.c[i][j].is_constant()) r.constant = false;
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (r.c[i][j] != -r.c[j][i]) r.antisymmetric = false;

  std::vector<Multivector> ham;
  for (const auto& l : lambda) ham.push_back(hamiltonian(p, l));
  for (std::size_t i = 0; i < m && r.homomorphic; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (vf_bracket(ham[i], ham[j]) != hamiltonian(p, lam(g.bracket(g.basis(i), g.basis(j))))) {
        r.homomorphic = false;
        break;
      }

  if (r.constant) {
    // c(x, y) extended bilinearly.
    auto cv = [&](const Vector& x, const Vector& y) {
      Poly out(n);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          if (sgn(x[a]) != 0 && sgn(y[b]) != 0) out += (x[a] * y[b]) * r.c[a][b];
      return out;
    };
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = 0; b < m && ok; ++b)
        for (std::size_t c = 0; c < m && ok; ++c) {
          Vector u = g.basis(a), v = g.basis(b), w = g.basis(c);
          Poly s = cv(g.bracket(u, v), w) + cv(g.bracket(v, w), u) + cv(g.bracket(w, u), v);
          if (!s.is_zero()) ok = false;
        }
    r.cyclic_zero = ok;
  }
  return r;
}

std::string to_string(IdealVerdict v) {
  switch (v) {
    case IdealVerdict::poisson: return "poisson";
    case IdealVerdict::refuted: return "refuted";
    case IdealVerdict::undecided: return "undecided";
  }
  return "";
}

std::optional<std::vector<Poly>> bounded_membership(const Poly& target,
                                                    const std::vector<Poly>& gens,
                                                    unsigned bound) {
  const std::size_t n = target.nvars();
  if (target.is_zero()) return std::vector<Poly>(gens.size(), Poly(n));
  std::vector<Monomial> mult;
  for (unsigned d = 0; d <= bound; ++d)
    for (const auto& m : monomials_of_degree(n, d)) mult.push_back(m);
  std::map<Monomial, std::size_t, GrlexLess> row;
  auto row_of = [&](const Monomial& m) { return row.try_emplace(m, row.size()).first->second; };
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
  for (const auto& g : gens)
    for (const auto& m : mult) {
      std::vector<std::pair<std::size_t, Rational>> col;
      for (const auto& [gm, q] : g.terms()) col.emplace_back(row_of(gm * m), q);
      cols.push_back(std::move(col));
    }
  std::vector<std::pair<std::size_t, Rational>> rhs;
  for (const auto& [m, q] : target.terms()) rhs.emplace_back(row_of(m), q);
  Matrix a(row.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, q] : cols[j]) a(i, j) = q;
  Vector b(row.size());
  for (const auto& [i, q] : rhs) b[i] = q;
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  std::vector<Poly> h(gens.size(), Poly(n));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t t = 0; t < mult.size(); ++t) {
      const Rational& q = (*x)[k * mult.size() + t];
      if (sgn(q) != 0) h[k].add_term(mult[t], q);
    }
  return h;
}

namespace {

/// A point of {-1,0,1}^n where every generator vanishes and `f` does not.
std::optional<Vector> separating_point(const Poly& f, const std::vector<Poly>& gens) {
  const std::size_t n = f.nvars();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    Vector pt(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) pt[i] = static_cast<long>(c % 3) - 1;
    bool zero = true;
    for (const auto& g : gens)
      if (sgn(g.eval(pt)) != 0) {
        zero = false;
        break;
      }
    if (zero && sgn(f.eval(pt)) != 0) return pt;
  }
  return std::nullopt;
}

/// With homogeneous generators and a homogeneous target, any representation
/// can be reduced to h_k homogeneous of degree deg(target) - deg(g_k). The
/// bounded search is then complete once those degrees fit under the bound.
bool search_is_complete(const Poly& f, const std::vector<Poly>& gens, unsigned bound) {
  if (!f.is_homogeneous()) return false;
  unsigned df = *f.degree();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) return false;
    unsigned dg = *g.degree();
    if (df >= dg && df - dg > bound) return false;
  }
  return true;
}

}  // namespace

IdealReport ideal_check(const Multivector& p, const std::vector<Poly>& gens,
                        unsigned degree_bound) {
  const std::size_t n = p.nvars();
  for (const auto& g : gens)
    if (g.nvars() != n) fail("dimension-mismatch", "generator over a different ring");
  IdealReport r;
  bool undecided = false, refuted = false;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IdealObligation ob;
      ob.generator = i;
      ob.coordinate = j;
      ob.bracket = pbracket(p, gens[i], Poly::variable(n, j));
      ob.multipliers = bounded_membership(ob.bracket, gens, degree_bound);
      if (!ob.multipliers) {
        if (auto pt = separating_point(ob.bracket, gens)) {
          ob.point = pt;
          ob.reason = "nonzero at a common zero of the generators";
          refuted = true;
        } else if (search_is_complete(ob.bracket, gens, degree_bound)) {
          ob.reason = "no homogeneous combination exists";
          refuted = true;
        } else {
          ob.reason = "no combination up to the degree bound";
          undecided = true;
        }
      }
      r.obligations.push_back(std::move(ob));
    }
  r.verdict = refuted ? IdealVerdict::refuted
                      : (undecided ? IdealVerdict::undecided : IdealVerdict::poisson);
  return r;
}

}  // namespace pforge
