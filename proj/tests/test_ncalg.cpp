#include <doctest.h>

#include "pforge/error.hpp"
#include "pforge/ncalg.hpp"
#include "support.hpp"

using namespace pforge;
using namespace pforge::testing;

namespace {

Vector unit(std::size_t m, std::size_t i) {
  Vector v(m);
  v[i] = 1;
  return v;
}

// Leibniz rule checked on every pair of basis elements.
bool is_derivation(const AlgebraSC& a, const Matrix& x) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vector ei = a.basis(i), ej = a.basis(j);
      Vector lhs = x * a.mul(ei, ej);
      Vector rhs = a.mul(x * ei, ej);
      Vector t = a.mul(ei, x * ej);
      for (std::size_t k = 0; k < a.dim; ++k)
        if (lhs[k] != rhs[k] + t[k]) return false;
    }
  return true;
}

// Basis 1, u, t, tu, t^2, t^2 u of Q[t,u]/(t^3, u^2).
struct Curved {
  AlgebraSC a = truncated_polynomial_algebra({3, 2});
  Subspace b{unit(6, 0), unit(6, 2), unit(6, 4)};
  Matrix t_dt{6, 6}, t2_dt_plus{6, 6}, t2u_du{6, 6};
  Curved() {
    t_dt(2, 2) = 1;
    t_dt(3, 3) = 1;
    t_dt(4, 4) = 2;
    t_dt(5, 5) = 2;
    t2_dt_plus(4, 2) = 1;
    t2_dt_plus(5, 3) = 1;
    t2u_du(5, 1) = 1;
    t2_dt_plus = t2_dt_plus + t2u_du;
  }
};

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "none";
}

}  // namespace

TEST_CASE("derivations of small algebras") {
  DerivationReport m2 = derivations(matrix_algebra(2));
  CHECK(m2.basis.size() == 3);
  CHECK(m2.all_inner);
  CHECK(m2.closed);
  AlgebraSC t3 = truncated_polynomial_algebra({3});
  DerivationReport d = derivations(t3);
  CHECK(d.basis.size() == 2);
  CHECK(d.inner.empty());
  for (const auto& x : d.basis) CHECK(is_derivation(t3, x));
  // M_3: all derivations inner, dim = 9 - 1.
  DerivationReport m3 = derivations(matrix_algebra(3));
  CHECK(m3.basis.size() == 8);
  CHECK(m3.all_inner);
  for (const auto& x : m3.basis) CHECK(is_derivation(matrix_algebra(3), x));
  CHECK(derivations(product_of_fields(3)).basis.empty());
}

TEST_CASE("centers") {
  CHECK(center(matrix_algebra(2)).size() == 1);
  CHECK(center(truncated_polynomial_algebra({2, 2})).size() == 4);
  CHECK(center(product_of_fields(3)).size() == 3);
}

TEST_CASE("structure constants are validated") {
  AlgebraSC bad(2);
  bad.mult[0][0] = Vector{0, 1};
  bad.mult[1][0] = Vector{1, 0};
  CHECK(kind_of([&] { bad.validate(); }) == "non-associative");
}

TEST_CASE("submanifold algebras") {
  AlgebraSC t3 = truncated_polynomial_algebra({3});
  SubmanifoldReport r = submanifold_check(t3, {unit(3, 2)});
  CHECK(r.submanifold);
  IdealDerivations d = ideal_derivations(t3, {unit(3, 2)});
  CHECK(d.kernel_matches);
  // (st) in Q[s,t]/(s^2,t^2): the quotient has the shear s -> t, which no
  // derivation of A lifts.
  AlgebraSC st = truncated_polynomial_algebra({2, 2});
  SubmanifoldReport no = submanifold_check(st, {unit(4, 3)});
  CHECK_FALSE(no.submanifold);
  CHECK(no.target_dim == 4);
  CHECK(no.rank == 2);
  CHECK(submanifold_check(st, {}).submanifold);
  CHECK(kind_of([&] { submanifold_check(st, {Vector{1, 1, 0, 0}}); }) == "not-an-ideal");
}

TEST_CASE("quotient manifold algebras") {
  Vector diag{1, 1};
  QuotientReport qq = quotient_check(product_of_fields(2), {diag});
  CHECK(qq.q1);
  CHECK(qq.q2);
  CHECK_FALSE(qq.q3);
  // B = A is always a quotient manifold algebra of itself.
  AlgebraSC t3 = truncated_polynomial_algebra({3});
  QuotientReport all = quotient_check(t3, {unit(3, 0), unit(3, 1), unit(3, 2)});
  CHECK(all.q1);
  CHECK(all.q2);
  CHECK(all.q3);
  CHECK(kind_of([&] { quotient_check(t3, {unit(3, 1)}); }) == "not-a-subalgebra");
}

TEST_CASE("splitting curvature") {
  Curved c;
  CurvatureReport r = splitting_curvature(c.a, c.b, {c.t_dt, c.t2_dt_plus});
  REQUIRE(r.entries.size() == 1);
  CHECK_FALSE(r.flat);
  CHECK(r.entries[0].value == c.t2u_du);
  CHECK(is_derivation(c.a, r.entries[0].value));
  // Dropping the u-part gives a flat splitting.
  Matrix t2_dt = c.t2_dt_plus - c.t2u_du;
  CurvatureReport flat = splitting_curvature(c.a, c.b, {c.t_dt, t2_dt});
  CHECK(flat.flat);
  EndoList g{c.t_dt};
  CurvatureReport compat = splitting_curvature(c.a, c.b, {c.t_dt, t2_dt}, &g);
  REQUIRE(compat.compatible);
  CHECK_FALSE(*compat.compatible);
  CHECK(kind_of([&] { splitting_curvature(c.a, c.b, {c.t_dt}); }) == "s-not-a-splitting");
  CHECK(kind_of([&] { splitting_curvature(c.a, c.b, {c.t_dt, c.t2u_du}); }) == "s-not-a-splitting");
}

TEST_CASE("group-action compatible connections") {
  Curved c;
  ActionReport r = action_check(c.a, {c.t_dt});
  CHECK(r.lemma_holds);
  if (r.v_equal) CHECK(r.prop_holds == std::optional<bool>(true));
  for (const auto& v : r.v_g)
    for (const auto& b : r.b_g) CHECK(is_zero(v * b));
  AlgebraSC qq = product_of_fields(2);
  ActionReport trivial = action_check(qq, {});
  CHECK(trivial.v_g.empty());
  CHECK(trivial.b_g.size() == 2);
  CHECK(trivial.lemma_holds);
}

TEST_CASE("Bott connections are flat over the catalog") {
  std::size_t pairs = 0;
  for (const auto& g : lie_catalog())
    for (const auto& sub : coordinate_subalgebras(g)) {
      INFO(g.name << " sub " << sub.size());
      ConnectionTable f = bott_forms(g, sub), q = bott_quotient(g, sub);
      CHECK(f.flat);
      CHECK(f.well_defined);
      CHECK(q.flat);
      CHECK(q.well_defined);
      CHECK(f.module_basis.size() + sub.size() == g.dim);
      ++pairs;
    }
  CHECK(pairs > 100);
}

TEST_CASE("Bott quotient connection is independent of representatives") {
  Rng rng(71);
  for (const auto& g : lie_catalog())
    for (const auto& sub : coordinate_subalgebras(g)) {
      if (sub.empty() || sub.size() == g.dim) continue;
      ConnectionTable t = bott_quotient(g, sub);
      for (int trial = 0; trial < 3; ++trial) {
        std::uniform_int_distribution<std::size_t> pick(0, t.module_basis.size() - 1);
        std::size_t a = pick(rng);
        Vector shift(g.dim);
        for (const auto& v : sub) shift = axpy(small_rational(rng), v, std::move(shift));
        Vector rep = t.module_basis[a];
        for (std::size_t k = 0; k < g.dim; ++k) rep[k] += shift[k];
        // q([X, rep]) equals the a-th column of nabla_X.
        for (std::size_t x = 0; x < sub.size(); ++x) {
          Vector image = g.bracket(sub[x], rep);
          Vector col = t.nabla[x].col(a);
          Vector lifted(g.dim);
          for (std::size_t k = 0; k < col.size(); ++k) lifted = axpy(col[k], t.module_basis[k], std::move(lifted));
          Vector diff(g.dim);
          for (std::size_t k = 0; k < g.dim; ++k) diff[k] = image[k] - lifted[k];
          CHECK(in_span(sub, diff, g.dim));
        }
      }
    }
}

TEST_CASE("Bott connection on forms: so(3) rotation") {
  LieAlgebraSC so3_alg;
  for (const auto& g : lie_catalog())
    if (g.name == "so3") so3_alg = g;
  ConnectionTable t = bott_forms(so3_alg, {unit(3, 2)});
  REQUIRE(t.nabla.size() == 1);
  Matrix rot(2, 2);
  rot(0, 1) = -1;
  rot(1, 0) = 1;
  CHECK(t.nabla[0] == rot);
  CHECK(kind_of([&] { bott_forms(so3_alg, {unit(3, 0), unit(3, 1)}); }) == "not-a-subalgebra");
}

TEST_CASE("integral submanifold algebra") {
  AlgebraSC st = truncated_polynomial_algebra({2, 2});
  Matrix s_ds(4, 4), st_ds(4, 4);
  s_ds(2, 2) = 1;
  s_ds(3, 3) = 1;
  st_ds(3, 2) = 1;
  Subspace ideal{unit(4, 1), unit(4, 3)};
  IntegralReport r = bott_integral(st, {s_ds, st_ds}, ideal);
  CHECK(r.integral);
  CHECK(r.forms_dim == 4);
  CHECK(r.forms_d_dim == 2);
  CHECK(r.forms_i_cap_dim == 2);
  CHECK(r.gamma.empty());
  CHECK(r.acting.size() == 1);
  CHECK(r.table.well_defined);
  CHECK(r.table.flat);

  // D = Der(A): every form vanishes on D.
  IntegralReport full = bott_integral(st, derivation_basis(st), ideal);
  CHECK(full.integral);
  CHECK(full.forms_d_dim == 0);
  CHECK(full.gamma.empty());

  // D = Der(A), I = 0: no quotienting, Gamma = forms vanishing on D.
  IntegralReport zero = bott_integral(st, derivation_basis(st), {});
  CHECK(zero.integral);
  CHECK(zero.gamma.size() == zero.forms_d_dim);

  // st d/ds alone restricts to zero on A/I.
  IntegralReport partial = bott_integral(st, {st_ds}, ideal);
  CHECK_FALSE(partial.integral);
  CHECK(kind_of([&] { bott_integral(st, {Matrix::identity(4)}, ideal); }) == "not-a-derivation");
}
