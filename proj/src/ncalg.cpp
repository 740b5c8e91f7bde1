#include "pforge/ncalg.hpp"

#include <functional>

#include "pforge/error.hpp"

namespace pforge {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
  return std::to_string(i) + "," + std::to_string(j);
}

/// Rows P with P v = 0 exactly on span(sub), and P c_a = e_a on the
/// complement returned alongside.
std::pair<Matrix, Subspace> modulo(const Subspace& sub, std::size_t dim) {
  Subspace basis = span_basis(sub, dim);
  Subspace comp = complement_basis(basis, dim);
  std::vector<Vector> cols = comp;
  cols.insert(cols.end(), basis.begin(), basis.end());
  Matrix inv = *inverse(Matrix::from_columns(dim, cols));
  Matrix p(comp.size(), dim);
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) p(i, j) = inv(i, j);
  return {p, comp};
}

bool contains(const Subspace& big, const Subspace& small, std::size_t dim) {
  Subspace all = big;
  all.insert(all.end(), small.begin(), small.end());
  return span_rank(all, dim) == span_rank(big, dim);
}

bool equal_spans(const Subspace& a, const Subspace& b, std::size_t dim) {
  return contains(a, b, dim) && contains(b, a, dim);
}

Subspace flat_list(const EndoList& list) {
  Subspace out;
  for (const auto& m : list) out.push_back(flatten(m));
  return out;
}

/// Combination sum c_k list[k].
Matrix combine(const EndoList& list, const Vector& c, std::size_t dim) {
  Matrix out(dim, dim);
  for (std::size_t k = 0; k < list.size(); ++k)
    if (sgn(c[k]) != 0) out = out + list[k] * c[k];
  return out;
}

/// Elements of span(list) cut out by linear conditions: f maps an endomorphism
/// to a vector that must vanish.
template <class F>
EndoList subspace_where(const EndoList& list, std::size_t dim, F&& f) {
  if (list.empty()) return {};
  std::vector<Vector> cols;
  for (const auto& x : list) cols.push_back(f(x));
  std::size_t rows = cols.empty() ? 0 : cols[0].size();
  EndoList out;
  for (const auto& c : kernel(Matrix::from_columns(rows, cols))) out.push_back(combine(list, c, dim));
  return endo_span(out, dim);
}

Vector concat_columns(const Matrix& m) {
  Vector out;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m(i, j));
  return out;
}

/// Greedy complement of span(inner) inside span(outer), picked from outer.
Subspace relative_complement(const Subspace& outer, const Subspace& inner, std::size_t dim) {
  Subspace current = inner, out;
  for (const auto& v : outer)
    if (!in_span(current, v, dim)) {
      current.push_back(v);
      out.push_back(v);
    }
  return out;
}

std::vector<CurvatureEntry> curvature_of(const std::vector<Matrix>& nabla,
                                         const std::function<Vector(std::size_t, std::size_t)>& br,
                                         bool& flat) {
  std::vector<CurvatureEntry> out;
  flat = true;
  for (std::size_t i = 0; i < nabla.size(); ++i)
    for (std::size_t j = i + 1; j < nabla.size(); ++j) {
      Matrix r = nabla[i] * nabla[j] - nabla[j] * nabla[i];
      Vector c = br(i, j);
      for (std::size_t l = 0; l < nabla.size(); ++l)
        if (sgn(c[l]) != 0) r = r - nabla[l] * c[l];
      if (!r.is_zero()) flat = false;
      out.push_back({i, j, r});
    }
  return out;
}

}  // namespace

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

std::optional<Vector> endo_coordinates(const EndoList& basis, const Matrix& e) {
  const std::size_t n = e.rows() * e.cols();
  if (basis.empty()) return e.is_zero() ? std::optional<Vector>(Vector{}) : std::nullopt;
  return solve(Matrix::from_columns(n, flat_list(basis)), flatten(e));
}

EndoList endo_span(const EndoList& list, std::size_t dim) {
  EndoList out;
  for (const auto& v : span_basis(flat_list(list), dim * dim)) out.push_back(unflatten(v, dim));
  return out;
}

bool same_span(const EndoList& a, const EndoList& b, std::size_t dim) {
  return equal_spans(flat_list(a), flat_list(b), dim * dim);
}

Subspace center(const AlgebraSC& a) {
  const std::size_t m = a.dim;
  Matrix sys(m * m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j) sys(i * m + k, j) = a.mult[j][i][k] - a.mult[i][j][k];
  return kernel(sys);
}

AlgebraReport validate_algebra(const AlgebraSC& a) {
  a.validate();
  return {center(a)};
}

DerivationReport derivations(const AlgebraSC& a) {
  DerivationReport r;
  r.basis = derivation_basis(a);
  EndoList ad;
  for (std::size_t i = 0; i < a.dim; ++i)
    ad.push_back(a.left(a.basis(i)) - a.right(a.basis(i)));
  r.inner = endo_span(ad, a.dim);
  r.all_inner = r.inner.size() == r.basis.size();
  for (std::size_t i = 0; i < r.basis.size() && r.closed; ++i)
    for (std::size_t j = i + 1; j < r.basis.size(); ++j)
      if (!endo_coordinates(r.basis, commutator(r.basis[i], r.basis[j]))) {
        r.closed = false;
        break;
      }
  return r;
}

void require_ideal(const AlgebraSC& a, const Subspace& ideal) {
  for (std::size_t b = 0; b < ideal.size(); ++b)
    for (std::size_t i = 0; i < a.dim; ++i)
      if (!in_span(ideal, a.mul(a.basis(i), ideal[b]), a.dim) ||
          !in_span(ideal, a.mul(ideal[b], a.basis(i)), a.dim))
        fail("not-an-ideal", "subspace is not a two-sided ideal", ErrorClass::precondition,
             pair_str(b, i));
}

void require_subalgebra(const AlgebraSC& a, const Subspace& sub) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < sub.size(); ++j)
      if (!in_span(sub, a.mul(sub[i], sub[j]), a.dim))
        fail("not-a-subalgebra", "subspace is not closed under multiplication",
             ErrorClass::precondition, pair_str(i, j));
}

Quotient quotient_algebra(const AlgebraSC& a, const Subspace& ideal) {
  auto [p, comp] = modulo(ideal, a.dim);
  Quotient q{AlgebraSC(comp.size(), a.name + "/I"), comp, p};
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = 0; j < comp.size(); ++j) q.algebra.mult[i][j] = p * a.mul(comp[i], comp[j]);
  if (a.unit) q.algebra.unit = p * *a.unit;
  return q;
}

AlgebraSC subalgebra(const AlgebraSC& a, const Subspace& sub) {
  AlgebraSC b(sub.size(), a.name + "|B");
  Matrix embed = Matrix::from_columns(a.dim, sub);
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < sub.size(); ++j) {
      auto c = solve(embed, a.mul(sub[i], sub[j]));
      if (!c) fail("not-a-subalgebra", "product leaves the subspace", ErrorClass::precondition,
                   pair_str(i, j));
      b.mult[i][j] = *c;
    }
  if (a.unit) {
    if (auto u = solve(embed, *a.unit)) b.unit = *u;
  }
  return b;
}

IdealDerivations ideal_derivations(const AlgebraSC& a, const Subspace& ideal_in) {
  Subspace ideal = span_basis(ideal_in, a.dim);
  require_ideal(a, ideal);
  const std::size_t m = a.dim;
  IdealDerivations r;
  EndoList der = derivation_basis(a);
  Quotient q = quotient_algebra(a, ideal);
  r.der_i = subspace_where(der, m, [&](const Matrix& x) {
    Vector out;
    for (const auto& b : ideal) {
      Vector v = q.projection * (x * b);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  });
  r.der_i0 = subspace_where(der, m, [&](const Matrix& x) { return concat_columns(q.projection * x); });
  r.target = derivation_basis(q.algebra);
  const std::size_t k = q.algebra.dim;
  std::vector<Vector> cols;
  for (const auto& x : r.der_i) {
    std::vector<Vector> restricted;
    for (const auto& c : q.complement) restricted.push_back(q.projection * (x * c));
    Matrix rx = Matrix::from_columns(k, restricted);
    auto coords = endo_coordinates(r.target, rx);
    if (!coords) fail("invariant-violation", "restriction is not a derivation of A/I");
    cols.push_back(*coords);
  }
  r.r = Matrix::from_columns(r.target.size(), cols);
  r.rank = r.der_i.empty() ? 0 : rank(r.r);
  EndoList ker;
  for (const auto& v : kernel(r.r)) ker.push_back(combine(r.der_i, v, m));
  r.kernel_matches = same_span(ker, r.der_i0, m);
  return r;
}

SubmanifoldReport submanifold_check(const AlgebraSC& a, const Subspace& ideal) {
  IdealDerivations d = ideal_derivations(a, ideal);
  return {d.rank == d.target.size(), d.rank, d.target.size()};
}

namespace {

struct Preserving {
  EndoList q_b, v_b;
};

Preserving preserving(const AlgebraSC& a, const Subspace& sub, const EndoList& der) {
  auto [p, comp] = modulo(sub, a.dim);
  Preserving out;
  out.q_b = subspace_where(der, a.dim, [&](const Matrix& x) {
    Vector v;
    for (const auto& b : sub) {
      Vector w = p * (x * b);
      v.insert(v.end(), w.begin(), w.end());
    }
    return v;
  });
  out.v_b = subspace_where(der, a.dim, [&](const Matrix& x) {
    Vector v;
    for (const auto& b : sub) {
      Vector w = x * b;
      v.insert(v.end(), w.begin(), w.end());
    }
    return v;
  });
  return out;
}

Subspace joint_kernel(const EndoList& ops, std::size_t dim) {
  Matrix stacked(ops.size() * dim, dim);
  for (std::size_t k = 0; k < ops.size(); ++k)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) stacked(k * dim + i, j) = ops[k](i, j);
  return kernel(stacked);
}

/// Restriction of X (with X(B) in B) to B, in B coordinates.
Matrix restrict_to(const Matrix& x, const Subspace& sub, std::size_t dim) {
  Matrix embed = Matrix::from_columns(dim, sub);
  std::vector<Vector> cols;
  for (const auto& b : sub) {
    auto c = solve(embed, x * b);
    if (!c) fail("invariant-violation", "derivation does not preserve the subalgebra");
    cols.push_back(*c);
  }
  return Matrix::from_columns(sub.size(), cols);
}

}  // namespace

QuotientReport quotient_check(const AlgebraSC& a, const Subspace& sub_in) {
  a.validate();
  Subspace sub = span_basis(sub_in, a.dim);
  require_subalgebra(a, sub);
  const std::size_t m = a.dim;
  QuotientReport r;
  EndoList der = derivation_basis(a);
  Preserving pr = preserving(a, sub, der);
  r.q_b = pr.q_b;
  r.v_b = pr.v_b;

  // Z(B) inside A.
  {
    const std::size_t k = sub.size();
    Matrix sys(k * m, k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t j = 0; j < k; ++j) {
        Vector d = a.mul(sub[j], sub[c]);
        Vector e = a.mul(sub[c], sub[j]);
        for (std::size_t t = 0; t < m; ++t) sys(c * m + t, j) = d[t] - e[t];
      }
    for (const auto& y : kernel(sys)) {
      Vector x(m);
      for (std::size_t j = 0; j < k; ++j) x = axpy(y[j], sub[j], std::move(x));
      r.center_b.push_back(std::move(x));
    }
  }
  r.b_cap_center = intersect(sub, center(a), m);
  r.q1 = equal_spans(r.center_b, r.b_cap_center, m);

  AlgebraSC b = subalgebra(a, sub);
  EndoList der_b = derivation_basis(b);
  r.der_b_dim = der_b.size();
  std::vector<Vector> cols;
  for (const auto& x : r.q_b) {
    auto c = endo_coordinates(der_b, restrict_to(x, sub, m));
    if (!c) fail("invariant-violation", "restriction is not a derivation of B");
    cols.push_back(*c);
  }
  r.restriction_rank = cols.empty() ? 0 : rank(Matrix::from_columns(der_b.size(), cols));
  r.q2 = r.restriction_rank == r.der_b_dim;

  r.invariants = r.v_b.empty() ? span_basis(
                                     [&] {
                                       Subspace all;
                                       for (std::size_t i = 0; i < m; ++i) all.push_back(a.basis(i));
                                       return all;
                                     }(),
                                     m)
                               : joint_kernel(r.v_b, m);
  r.q3 = equal_spans(r.invariants, sub, m);
  return r;
}

CurvatureReport splitting_curvature(const AlgebraSC& a, const Subspace& sub_in,
                                    const EndoList& lifts, const EndoList* g) {
  a.validate();
  Subspace sub = span_basis(sub_in, a.dim);
  require_subalgebra(a, sub);
  const std::size_t m = a.dim;
  EndoList der = derivation_basis(a);
  AlgebraSC b = subalgebra(a, sub);
  EndoList der_b = derivation_basis(b);
  auto [p, comp] = modulo(sub, m);
  CurvatureReport r;
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    const Matrix& x = lifts[i];
    if (x.rows() != m || x.cols() != m) fail("dimension-mismatch", "lift has the wrong shape");
    if (!endo_coordinates(der, x))
      fail("s-not-a-splitting", "lift is not a derivation of A", ErrorClass::precondition,
           std::to_string(i));
    for (const auto& v : sub)
      if (!is_zero(p * (x * v)))
        fail("s-not-a-splitting", "lift does not preserve B", ErrorClass::precondition,
             std::to_string(i));
    r.der_b.push_back(restrict_to(x, sub, m));
  }
  if (r.der_b.size() != der_b.size() || endo_span(r.der_b, sub.size()).size() != der_b.size())
    fail("s-not-a-splitting", "restrictions of the lifts are not a basis of Der(B)",
         ErrorClass::precondition);
  for (std::size_t i = 0; i < lifts.size(); ++i)
    for (std::size_t j = i + 1; j < lifts.size(); ++j) {
      Vector c = *endo_coordinates(r.der_b, commutator(r.der_b[i], r.der_b[j]));
      Matrix rij = commutator(lifts[i], lifts[j]) - combine(lifts, c, m);
      if (!rij.is_zero()) r.flat = false;
      r.entries.push_back({i, j, rij});
    }
  if (g) {
    bool ok = true;
    for (const auto& u : *g)
      for (const auto& x : lifts)
        if (!commutator(u, x).is_zero()) ok = false;
    r.compatible = ok;
  }
  return r;
}

ActionReport action_check(const AlgebraSC& a, const EndoList& g) {
  a.validate();
  const std::size_t m = a.dim;
  EndoList der = derivation_basis(a);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!endo_coordinates(der, g[i]))
      fail("not-a-derivation", "element of g is not a derivation", ErrorClass::precondition,
           std::to_string(i));
  ActionReport r;
  EndoList gen;
  for (const auto& z : center(a)) {
    Matrix lz = a.left(z);
    for (const auto& x : g) gen.push_back(lz * x);
  }
  r.v_g = endo_span(gen, m);
  r.b_g = r.v_g.empty() ? complement_basis({}, m) : joint_kernel(r.v_g, m);
  Preserving pr = preserving(a, r.b_g, der);
  r.q_b = pr.q_b;
  r.v_b = pr.v_b;
  auto [p, comp] = modulo(flat_list(r.v_g), m * m);
  r.q_g = subspace_where(der, m, [&](const Matrix& xi) {
    Vector out;
    for (const auto& v : r.v_g) {
      Vector w = p * flatten(commutator(v, xi));
      out.insert(out.end(), w.begin(), w.end());
    }
    if (out.empty()) out.push_back(0);
    return out;
  });
  r.lemma_holds = contains(flat_list(r.q_b), flat_list(r.q_g), m * m);
  r.v_equal = same_span(r.v_g, r.v_b, m);
  if (r.v_equal) r.prop_holds = same_span(r.q_g, r.q_b, m);
  return r;
}

namespace {

void require_lie_subalgebra(const LieAlgebraSC& l, const Subspace& l0) {
  for (std::size_t i = 0; i < l0.size(); ++i)
    for (std::size_t j = i + 1; j < l0.size(); ++j)
      if (!in_span(l0, l.bracket(l0[i], l0[j]), l.dim))
        fail("not-a-subalgebra", "subspace is not closed under the bracket",
             ErrorClass::precondition, pair_str(i, j));
}

}  // namespace

ConnectionTable bott_quotient(const LieAlgebraSC& l, const Subspace& l0_in) {
  l.validate();
  Subspace l0 = span_basis(l0_in, l.dim);
  require_lie_subalgebra(l, l0);
  auto [p, comp] = modulo(l0, l.dim);
  ConnectionTable t;
  t.module_basis = comp;
  for (const auto& x : l0) {
    Matrix ad = l.ad(x);
    for (const auto& b : l0)
      if (!is_zero(p * (ad * b))) t.well_defined = false;
    std::vector<Vector> cols;
    for (const auto& c : comp) cols.push_back(p * (ad * c));
    t.nabla.push_back(Matrix::from_columns(comp.size(), cols));
  }
  Matrix embed = Matrix::from_columns(l.dim, l0);
  t.curvature = curvature_of(
      t.nabla, [&](std::size_t i, std::size_t j) { return *solve(embed, l.bracket(l0[i], l0[j])); },
      t.flat);
  return t;
}

ConnectionTable bott_forms(const LieAlgebraSC& l, const Subspace& l0_in) {
  l.validate();
  Subspace l0 = span_basis(l0_in, l.dim);
  require_lie_subalgebra(l, l0);
  ConnectionTable t;
  t.module_basis = kernel(Matrix::from_rows(l.dim, l0));
  Matrix ann = Matrix::from_columns(l.dim, t.module_basis);
  for (const auto& x : l0) {
    Matrix act = l.ad(x).transpose() * Rational(-1);
    std::vector<Vector> cols;
    for (const auto& alpha : t.module_basis) {
      auto c = solve(ann, act * alpha);
      if (!c) {
        t.well_defined = false;
        c = Vector(t.module_basis.size());
      }
      cols.push_back(*c);
    }
    t.nabla.push_back(Matrix::from_columns(t.module_basis.size(), cols));
  }
  Matrix embed = Matrix::from_columns(l.dim, l0);
  t.curvature = curvature_of(
      t.nabla, [&](std::size_t i, std::size_t j) { return *solve(embed, l.bracket(l0[i], l0[j])); },
      t.flat);
  return t;
}

IntegralReport bott_integral(const AlgebraSC& a, const EndoList& d_in, const Subspace& ideal_in) {
  a.validate();
  const std::size_t m = a.dim;
  Subspace ideal = span_basis(ideal_in, m);
  require_ideal(a, ideal);
  EndoList der = derivation_basis(a);
  const std::size_t r = der.size();
  for (std::size_t i = 0; i < d_in.size(); ++i)
    if (d_in[i].rows() != m || d_in[i].cols() != m || !endo_coordinates(der, d_in[i]))
      fail("not-a-derivation", "distribution element is not a derivation",
           ErrorClass::precondition, std::to_string(i));
  EndoList d = endo_span(d_in, m);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (!endo_coordinates(d, commutator(d[i], d[j])))
        fail("not-a-subalgebra", "distribution is not closed under commutator",
             ErrorClass::precondition, pair_str(i, j));
  IdealDerivations idr = ideal_derivations(a, ideal);
  if (idr.rank != idr.target.size())
    fail("not-a-submanifold", "A/I is not a submanifold algebra", ErrorClass::precondition);

  IntegralReport rep;
  if (!contains(flat_list(idr.der_i), flat_list(d), m * m)) {
    rep.reason = "D is not contained in Der_I(A)";
    return rep;
  }
  {
    std::vector<Vector> cols;
    for (const auto& x : d) {
      std::vector<Vector> restricted;
      Quotient q = quotient_algebra(a, ideal);
      for (const auto& c : q.complement) restricted.push_back(q.projection * (x * c));
      cols.push_back(*endo_coordinates(idr.target, Matrix::from_columns(q.algebra.dim, restricted)));
    }
    std::size_t rk = cols.empty() ? 0 : rank(Matrix::from_columns(idr.target.size(), cols));
    if (rk != idr.target.size()) {
      rep.reason = "r_I(D) is a proper subspace of Der(A/I)";
      return rep;
    }
  }
  rep.integral = true;

  // 1-forms as their values on the Der(A) basis, concatenated.
  const std::size_t fdim = r * m;
  auto values = [&](std::size_t i, std::size_t j) {
    Vector v;
    for (const auto& x : der) {
      Vector w = a.mul(a.basis(i), x * a.basis(j));
      v.insert(v.end(), w.begin(), w.end());
    }
    return v;
  };
  auto eval = [&](const Vector& alpha, const Vector& xcoords) {
    Vector out(m);
    for (std::size_t k = 0; k < r; ++k)
      if (sgn(xcoords[k]) != 0)
        for (std::size_t t = 0; t < m; ++t) out[t] += xcoords[k] * alpha[k * m + t];
    return out;
  };
  Subspace gens;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gens.push_back(values(i, j));
  Subspace forms = span_basis(gens, fdim);
  rep.forms_dim = forms.size();

  auto cut = [&](const Subspace& space, auto&& constraint) {
    if (space.empty()) return Subspace{};
    std::vector<Vector> cols;
    for (const auto& v : space) cols.push_back(constraint(v));
    Subspace out;
    for (const auto& c : kernel(Matrix::from_columns(cols[0].size(), cols))) {
      Vector w(fdim);
      for (std::size_t k = 0; k < space.size(); ++k) w = axpy(c[k], space[k], std::move(w));
      out.push_back(std::move(w));
    }
    return span_basis(out, fdim);
  };
  std::vector<Vector> d_coords;
  for (const auto& x : d) d_coords.push_back(*endo_coordinates(der, x));
  Subspace forms_d = cut(forms, [&](const Vector& alpha) {
    Vector out;
    for (const auto& y : d_coords) {
      Vector w = eval(alpha, y);
      out.insert(out.end(), w.begin(), w.end());
    }
    out.push_back(0);
    return out;
  });
  rep.forms_d_dim = forms_d.size();
  auto [pi, icomp] = modulo(ideal, m);
  auto in_ideal_values = [&](const Vector& alpha) {
    Vector out;
    for (std::size_t k = 0; k < r; ++k) {
      Vector w = pi * Vector(alpha.begin() + k * m, alpha.begin() + (k + 1) * m);
      out.insert(out.end(), w.begin(), w.end());
    }
    out.push_back(0);
    return out;
  };
  Subspace forms_di = cut(forms_d, in_ideal_values);
  rep.forms_i_cap_dim = forms_di.size();
  rep.gamma = relative_complement(forms_d, forms_di, fdim);

  // D_I and lifts of D / D_I.
  EndoList d_i = subspace_where(d, m, [&](const Matrix& x) {
    Vector v = concat_columns(pi * x);
    v.push_back(0);
    return v;
  });
  {
    Subspace lifted = relative_complement(flat_list(d), flat_list(d_i), m * m);
    for (const auto& v : lifted) rep.acting.push_back(unflatten(v, m));
  }

  auto lie = [&](const Matrix& x, const Vector& alpha) {
    Vector out(fdim);
    for (std::size_t k = 0; k < r; ++k) {
      Vector first = x * Vector(alpha.begin() + k * m, alpha.begin() + (k + 1) * m);
      Vector second = eval(alpha, *endo_coordinates(der, commutator(x, der[k])));
      for (std::size_t t = 0; t < m; ++t) out[k * m + t] = first[t] - second[t];
    }
    return out;
  };
  std::vector<Vector> quot_cols = rep.gamma;
  quot_cols.insert(quot_cols.end(), forms_di.begin(), forms_di.end());
  Matrix quot = Matrix::from_columns(fdim, quot_cols);
  auto gamma_coords = [&](const Vector& alpha, bool& ok) {
    auto c = solve(quot, alpha);
    if (!c) {
      ok = false;
      return Vector(rep.gamma.size());
    }
    return Vector(c->begin(), c->begin() + rep.gamma.size());
  };

  ConnectionTable& t = rep.table;
  t.module_basis = rep.gamma;
  for (const auto& x : rep.acting) {
    std::vector<Vector> cols;
    for (const auto& g : rep.gamma) cols.push_back(gamma_coords(lie(x, g), t.well_defined));
    t.nabla.push_back(Matrix::from_columns(rep.gamma.size(), cols));
    for (const auto& s : forms_di)
      if (!in_span(forms_di, lie(x, s), fdim)) t.well_defined = false;
  }
  for (const auto& v : d_i)
    for (const auto& alpha : forms_d)
      if (!is_zero(Vector(in_ideal_values(lie(v, alpha))))) t.well_defined = false;

  EndoList basis_mod = rep.acting;
  basis_mod.insert(basis_mod.end(), d_i.begin(), d_i.end());
  t.curvature = curvature_of(
      t.nabla,
      [&](std::size_t i, std::size_t j) {
        Vector c = *endo_coordinates(basis_mod, commutator(rep.acting[i], rep.acting[j]));
        return Vector(c.begin(), c.begin() + rep.acting.size());
      },
      t.flat);
  return rep;
}

bool is_poisson_ideal(const AlgebraSC& a, const std::vector<std::vector<Vector>>& p,
                      const Subspace& ideal) {
  for (const auto& b : ideal)
    for (std::size_t i = 0; i < a.dim; ++i) {
      Vector v(a.dim);
      for (std::size_t s = 0; s < a.dim; ++s)
        if (sgn(b[s]) != 0) v = axpy(b[s], p[s][i], std::move(v));
      if (!in_span(ideal, v, a.dim)) return false;
    }
  return true;
}

std::vector<Subspace> coordinate_ideals(const AlgebraSC& a) {
  std::vector<Subspace> out;
  for (unsigned long mask = 0; mask < (1ul << a.dim); ++mask) {
    Subspace s;
    for (std::size_t i = 0; i < a.dim; ++i)
      if (mask >> i & 1) s.push_back(a.basis(i));
    bool ideal = true;
    for (const auto& b : s)
      for (std::size_t i = 0; i < a.dim && ideal; ++i)
        if (!in_span(s, a.mul(a.basis(i), b), a.dim) || !in_span(s, a.mul(b, a.basis(i)), a.dim))
          ideal = false;
    if (ideal) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace pforge
