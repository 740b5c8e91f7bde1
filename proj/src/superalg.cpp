#include "pforge/superalg.hpp"

#include <algorithm>
#include <numeric>

#include "pforge/error.hpp"

namespace pforge {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Vector scaled(const Vector& v, const Rational& q) {
  Vector out(v);
  for (auto& x : out) x *= q;
  return out;
}

void add_into(Vector& acc, const Vector& v, const Rational& q) {
  if (sgn(q) == 0) return;
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += q * v[i];
}

}  // namespace

MultiMap::MultiMap(std::size_t dim, std::size_t arity)
    : dim_(dim), arity_(arity), table_(binom(dim, arity), Vector(dim)) {}

std::size_t MultiMap::position(const IndexTuple& sorted) const {
  // Lexicographic rank among increasing arity-subsets of {0..dim-1}.
  std::size_t pos = 0, prev = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t v = (i == 0 ? 0 : prev + 1); v < sorted[i]; ++v)
      pos += binom(dim_ - 1 - v, arity_ - 1 - i);
    prev = sorted[i];
  }
  return pos;
}

Vector MultiMap::value(const IndexTuple& args) const {
  if (args.size() != arity_) fail("grade-mismatch", "wrong number of arguments");
  IndexTuple s = args;
  int sign = sort_with_sign(s);
  if (sign == 0) return Vector(dim_);
  const Vector& v = table_[position(s)];
  return sign > 0 ? v : scaled(v, Rational(-1));
}

const Vector& MultiMap::at(const IndexTuple& sorted) const { return table_[position(sorted)]; }

void MultiMap::set(const IndexTuple& sorted, Vector v) {
  if (v.size() != dim_) fail("dimension-mismatch", "value has the wrong length");
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] >= dim_ || (i > 0 && sorted[i - 1] >= sorted[i]))
      fail("invariant-violation", "argument tuple must be strictly increasing and < dim");
  table_[position(sorted)] = std::move(v);
}

bool MultiMap::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const Vector& v) { return pforge::is_zero(v); });
}

MultiMap& MultiMap::operator+=(const MultiMap& rhs) {
  if (dim_ != rhs.dim_) fail("dimension-mismatch", "maps on different spaces");
  if (arity_ != rhs.arity_) fail("grade-mismatch", "maps of different arity");
  for (std::size_t t = 0; t < table_.size(); ++t) add_into(table_[t], rhs.table_[t], Rational(1));
  return *this;
}

MultiMap MultiMap::operator-() const { return Rational(-1) * *this; }

MultiMap operator*(const Rational& q, MultiMap m) {
  for (auto& v : m.table_)
    for (auto& x : v) x *= q;
  return m;
}

MultiMap MultiMap::vector(const Vector& v) {
  MultiMap m(v.size(), 0);
  m.table_[0] = v;
  return m;
}

MultiMap comp_product(const MultiMap& a, const MultiMap& b) {
  if (a.dim() != b.dim()) fail("dimension-mismatch", "maps on different spaces");
  const std::size_t dim = a.dim(), m = a.arity(), n = b.arity();
  if (m == 0) return MultiMap(dim, n == 0 ? 0 : n - 1);
  const std::size_t r = m + n - 1;
  MultiMap out(dim, r);
  const auto shuffles = index_tuples(r, n);
  for (const auto& x : out.tuples()) {
    Vector acc(dim);
    for (const auto& s : shuffles) {
      IndexTuple rest;
      {
        std::size_t k = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (k < s.size() && s[k] == i)
            ++k;
          else
            rest.push_back(i);
        }
      }
      const int sign = merge_tuples(s, rest).first;
      IndexTuple bx, ax(1);
      for (auto i : s) bx.push_back(x[i]);
      for (auto i : rest) ax.push_back(x[i]);
      const Vector w = b.at(bx);
      for (std::size_t t = 0; t < dim; ++t) {
        if (sgn(w[t]) == 0) continue;
        ax[0] = t;
        add_into(acc, a.value(ax), sign > 0 ? w[t] : Rational(-w[t]));
      }
    }
    out.set(x, std::move(acc));
  }
  return out;
}

MultiMap supercomm(const MultiMap& a, const MultiMap& b) {
  if (a.dim() != b.dim()) fail("dimension-mismatch", "maps on different spaces");
  const std::size_t m = a.arity(), n = b.arity();
  if (m == 0 && n == 0) return MultiMap(a.dim(), 0);
  MultiMap ab = comp_product(a, b), ba = comp_product(b, a);
  if (((m + 1) * n) % 2) ab = -ab;
  if (m % 2) ba = -ba;
  return ab + ba;
}

namespace {

Rational parity_sign(std::size_t e) { return e % 2 ? Rational(-1) : Rational(1); }

}  // namespace

MultiMap symmetry_defect(const MultiMap& a, const MultiMap& b) {
  return supercomm(a, b) - parity_sign(a.arity() * b.arity()) * supercomm(b, a);
}

MultiMap jacobi_defect(const MultiMap& a, const MultiMap& b, const MultiMap& c) {
  const std::size_t m = a.arity(), n = b.arity(), k = c.arity();
  return parity_sign(m * k) * supercomm(supercomm(a, b), c) +
         parity_sign(m * n) * supercomm(supercomm(b, c), a) +
         parity_sign(n * k) * supercomm(supercomm(c, a), b);
}

MultiMap dmu(const MultiMap& mu, const MultiMap& a) {
  if (mu.arity() != 2) fail("grade-mismatch", "mu must have arity 2");
  if (!supercomm(mu, mu).is_zero())
    fail("non-involutive", "[mu, mu] != 0", ErrorClass::precondition);
  return supercomm(mu, a);
}

MultiMap lie_tensor(const LieAlgebraSC& g) {
  MultiMap mu(g.dim, 2);
  for (const auto& t : mu.tuples()) mu.set(t, g.c[t[0]][t[1]]);
  return mu;
}

MultiMap chevalley_eilenberg(const LieAlgebraSC& g, const MultiMap& c) {
  const std::size_t k = c.arity(), dim = g.dim;
  MultiMap out(dim, k + 1);
  for (const auto& x : out.tuples()) {
    Vector acc(dim);
    for (std::size_t i = 0; i <= k; ++i) {
      Vector v = c.value(erase_at(x, i));
      Vector br = g.bracket(g.basis(x[i]), v);
      add_into(acc, br, Rational(i % 2 ? -1 : 1));
    }
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = i + 1; j <= k; ++j) {
        const Vector& br = g.c[x[i]][x[j]];
        IndexTuple args(1);
        for (std::size_t t = 0; t <= k; ++t)
          if (t != i && t != j) args.push_back(x[t]);
        for (std::size_t s = 0; s < dim; ++s) {
          if (sgn(br[s]) == 0) continue;
          args[0] = s;
          add_into(acc, c.value(args), (i + j) % 2 ? Rational(-br[s]) : br[s]);
        }
      }
    out.set(x, std::move(acc));
  }
  return out;
}

namespace {

Poly poly_det(std::vector<std::vector<Poly>> m, std::size_t nvars) {
  const std::size_t k = m.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Poly out(nvars);
  do {
    IndexTuple p(perm.begin(), perm.end());
    int s = sort_with_sign(p);
    Poly term(nvars, Rational(1));
    for (std::size_t i = 0; i < k; ++i) term = term * m[i][perm[i]];
    out += s > 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

MultiMap truncated_action(const Multivector& u, unsigned order) {
  const std::size_t n = u.nvars(), k = u.grade();
  for (const auto& [idx, c] : u.terms())
    if (!c.is_homogeneous() || *c.degree() != k)
      fail("non-descending", "coefficients must be homogeneous of degree equal to the grade",
           ErrorClass::precondition, c.str());
  std::vector<Monomial> basis;
  for (unsigned d = 0; d < order; ++d) {
    auto mons = monomials_of_degree(n, d);
    basis.insert(basis.end(), mons.rbegin(), mons.rend());
  }
  const std::size_t dim = basis.size();
  auto reduce = [&](const Poly& f) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = f.coeff(basis[i]);
    return v;
  };
  MultiMap out(dim, k);
  for (const auto& x : out.tuples()) {
    Poly acc(n);
    for (const auto& [idx, c] : u.terms()) {
      std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          m[a][b] = Poly::term(basis[x[b]], Rational(1)).diff(idx[a]);
      acc += c * poly_det(std::move(m), n);
    }
    out.set(x, reduce(acc));
  }
  return out;
}

namespace {

/// Columns of the matrix of a linear map given on unit vectors of its domain.
template <class F>
Matrix matrix_of(std::size_t domain, F&& image) {
  std::vector<Vector> cols;
  std::size_t rows = 0;
  for (std::size_t j = 0; j < domain; ++j) {
    cols.push_back(image(j));
    rows = cols.back().size();
  }
  return Matrix::from_columns(rows, cols);
}

std::string tuple_str(const IndexTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

KoszulReport koszul_check(const FiniteAlgebra& alg, std::size_t max_grade) {
  alg.validate();
  if (!alg.is_commutative()) fail("non-commutative", "the algebra must be commutative");
  if (!alg.unit) fail("invariant-violation", "the algebra must have a unit");
  const std::size_t m = alg.dim;
  KoszulReport rep;

  // First-order operators: [phi, op_a](b) = b [phi, op_a](1).
  auto first_order_defect = [&](const Matrix& phi) {
    Vector out;
    for (std::size_t i = 0; i < m; ++i) {
      Matrix la = alg.left(alg.basis(i));
      Matrix c = phi * la - la * phi;
      Vector c1 = c * *alg.unit;
      for (std::size_t j = 0; j < m; ++j) {
        Vector lhs = c * alg.basis(j);
        Vector rhs = alg.mul(alg.basis(j), c1);
        for (std::size_t k = 0; k < m; ++k) out.push_back(lhs[k] - rhs[k]);
      }
    }
    return out;
  };
  Matrix sys = matrix_of(m * m, [&](std::size_t j) {
    Vector e(m * m);
    e[j] = 1;
    return first_order_defect(unflatten(e, m));
  });
  rep.diff_dim = kernel(sys).size();

  std::vector<Matrix> ops = derivation_basis(alg);
  rep.der_dim = ops.size();
  const std::size_t r = ops.size();
  for (std::size_t i = 0; i < m; ++i) ops.push_back(alg.left(alg.basis(i)));
  const std::size_t dim = ops.size();
  std::vector<Vector> flat;
  for (const auto& op : ops) flat.push_back(flatten(op));
  if (span_rank(flat, m * m) != dim || dim != rep.diff_dim) {
    rep.passed = false;
    rep.counterexample = "Diff^1(A) is not Der(A) + A";
    return rep;
  }
  Matrix to_coords = Matrix::from_columns(m * m, flat);
  auto coords = [&](const Matrix& e) {
    auto c = solve(to_coords, flatten(e));
    if (!c) fail("invariant-violation", "operator outside Diff^1(A)");
    return *c;
  };

  MultiMap mu(dim, 2);
  for (const auto& t : mu.tuples()) mu.set(t, coords(ops[t[0]] * ops[t[1]] - ops[t[1]] * ops[t[0]]));

  // a . u = op_a o u, as matrices on coordinates.
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < m; ++i) {
    Matrix la = alg.left(alg.basis(i));
    act.push_back(matrix_of(dim, [&](std::size_t j) { return coords(la * ops[j]); }));
  }
  auto a_part = [&](const Vector& v) { return Vector(v.begin() + r, v.end()); };
  auto from_a = [&](const Vector& w) {
    Vector v(dim);
    std::copy(w.begin(), w.end(), v.begin() + r);
    return v;
  };
  // Derivation part of u applied to w in A: u(w) - w u(1).
  auto derive = [&](std::size_t u, const Vector& w) {
    Vector uw = ops[u] * w;
    Vector corr = alg.mul(w, ops[u] * *alg.unit);
    for (std::size_t k = 0; k < m; ++k) uw[k] -= corr[k];
    return uw;
  };

  auto koszul_d = [&](const MultiMap& w) {
    const std::size_t n = w.arity();
    MultiMap out(dim, n + 1);
    for (const auto& x : out.tuples()) {
      Vector acc(dim);
      for (std::size_t i = 0; i <= n; ++i) {
        Vector term = from_a(derive(x[i], a_part(w.value(erase_at(x, i)))));
        add_into(acc, term, Rational(i % 2 ? -1 : 1));
      }
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
          const Vector br = mu.at({x[i], x[j]});
          IndexTuple args(1);
          for (std::size_t t = 0; t <= n; ++t)
            if (t != i && t != j) args.push_back(x[t]);
          for (std::size_t s = 0; s < dim; ++s) {
            if (sgn(br[s]) == 0) continue;
            args[0] = s;
            add_into(acc, w.value(args), (i + j) % 2 ? Rational(-br[s]) : br[s]);
          }
        }
      out.set(x, std::move(acc));
    }
    return out;
  };

  for (std::size_t n = 0; n <= max_grade; ++n) {
    std::vector<MultiMap> basis;
    if (n == 0) {
      for (std::size_t i = 0; i < m; ++i) basis.push_back(MultiMap::vector(from_a(alg.basis(i))));
    } else {
      const auto tuples = index_tuples(dim, n);
      const std::size_t unknowns = tuples.size() * dim;
      auto unit_map = [&](std::size_t j) {
        MultiMap w(dim, n);
        Vector v(dim);
        v[j % dim] = 1;
        w.set(tuples[j / dim], v);
        return w;
      };
      auto constraints = [&](const MultiMap& w) {
        Vector out;
        for (const auto& t : tuples) {
          const Vector& v = w.at(t);
          for (std::size_t k = 0; k < r; ++k) out.push_back(v[k]);
          if (t.back() >= r)
            for (std::size_t k = r; k < dim; ++k) out.push_back(v[k]);
        }
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t t1 = 0; t1 < dim; ++t1)
            for (const auto& rest : index_tuples(dim, n - 1)) {
              IndexTuple args{t1};
              args.insert(args.end(), rest.begin(), rest.end());
              Vector lhs(dim);
              for (std::size_t s = 0; s < dim; ++s) {
                if (sgn(act[i](s, t1)) == 0) continue;
                args[0] = s;
                add_into(lhs, w.value(args), act[i](s, t1));
              }
              args[0] = t1;
              Vector rhs = act[i] * w.value(args);
              for (std::size_t k = 0; k < dim; ++k) out.push_back(lhs[k] - rhs[k]);
            }
        return out;
      };
      Matrix c = matrix_of(unknowns, [&](std::size_t j) { return constraints(unit_map(j)); });
      for (const auto& v : kernel(c)) {
        MultiMap w(dim, n);
        for (std::size_t t = 0; t < tuples.size(); ++t)
          w.set(tuples[t], Vector(v.begin() + t * dim, v.begin() + (t + 1) * dim));
        basis.push_back(std::move(w));
      }
    }
    rep.form_dims.push_back(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      MultiMap lhs = supercomm(mu, basis[b]);
      MultiMap rhs = -koszul_d(basis[b]);
      if (lhs == rhs) continue;
      rep.passed = false;
      for (const auto& x : lhs.tuples())
        if (lhs.at(x) != rhs.at(x)) {
          rep.counterexample = "grade " + std::to_string(n) + ", basis form " +
                               std::to_string(b) + ", arguments " + tuple_str(x);
          break;
        }
      return rep;
    }
  }
  return rep;
}

}  // namespace pforge
