#include <doctest.h>

#include "pforge/error.hpp"
#include "pforge/form.hpp"
#include "pforge/homology.hpp"
#include "support.hpp"

using namespace pforge;
using namespace pforge::testing;

namespace {

Rational parity(std::size_t e) { return e % 2 ? Rational(-1) : Rational(1); }

Form df(const Poly& f) { return form_d(Form::scalar(f)); }

std::vector<Multivector> structures() { return {symplectic_plane(), so3(), sl2()}; }

}  // namespace

TEST_CASE("exterior derivative") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<std::size_t> g(0, 3);
    std::size_t k = g(rng);
    Form a = random_form(rng, 3, k, 3), b = random_form(rng, 3, g(rng), 2);
    CHECK(form_d(form_d(a)).is_zero());
    CHECK(form_d(form_wedge(a, b)) == form_wedge(form_d(a), b) + parity(k) * form_wedge(a, form_d(b)));
  }
  Poly f = Poly::parse("x0^2*x1", 2);
  Form expected(2, 1);
  expected.add_term({0}, Poly::parse("2*x0*x1", 2));
  expected.add_term({1}, Poly::parse("x0^2", 2));
  CHECK(df(f) == expected);
}

TEST_CASE("contraction conventions") {
  Rng rng(32);
  for (int t = 0; t < 60; ++t) {
    Form a = random_form(rng, 4, 3, 2);
    Multivector u = random_multivector(rng, 4, 1, 1), v = random_multivector(rng, 4, 1, 1);
    CHECK(interior(u, interior(v, a)) == interior(mv_wedge(v, u), a));
    // Derivation rule for a vector field on a wedge of 1-forms.
    Form b = random_form(rng, 4, 1, 2), c = random_form(rng, 4, 2, 1);
    CHECK(interior(u, form_wedge(b, c)) ==
          form_wedge(interior(u, b), c) - form_wedge(b, interior(u, c)));
  }
  CHECK_THROWS_AS(interior(Multivector::basis(2, {0, 1}, Poly(2, 1)), df(var(2, 0))), Error);
  CHECK(interior_or_zero(Multivector::basis(2, {0}, Poly(2, 1)), Form::scalar(var(2, 0))).is_zero());
}

TEST_CASE("Cartan formulas for the Lie derivative") {
  Rng rng(33);
  for (int t = 0; t < 40; ++t) {
    Multivector x = random_multivector(rng, 3, 1, 2), y = random_multivector(rng, 3, 1, 2);
    Form a = random_form(rng, 3, 2, 2);
    CHECK(form_d(lie_derivative(x, a)) == lie_derivative(x, form_d(a)));
    // L_X L_Y - L_Y L_X = L_[X,Y]
    CHECK(lie_derivative(x, lie_derivative(y, a)) - lie_derivative(y, lie_derivative(x, a)) ==
          lie_derivative(vf_bracket(x, y), a));
  }
}

TEST_CASE("delta agrees with its coordinate expansion") {
  Rng rng(34);
  for (const auto& p : structures())
    for (std::size_t k = 0; k <= p.nvars(); ++k)
      for (int t = 0; t < 8; ++t) {
        Form a = random_form(rng, p.nvars(), k, 3);
        CHECK(delta(p, a) == delta_coordinate(p, a));
      }
  // Also for bivectors that are not Poisson.
  for (int t = 0; t < 20; ++t) {
    Multivector p = random_multivector(rng, 3, 2, 2);
    Form a = random_form(rng, 3, 2, 2);
    CHECK(delta(p, a) == delta_coordinate(p, a));
  }
  Multivector p = symplectic_plane();
  Form a(2, 1);
  a.add_term({1}, var(2, 0));
  CHECK(delta(p, a) == Form::scalar(Poly(2, 1)));
}

TEST_CASE("delta squares to zero and anticommutes with d") {
  Rng rng(35);
  for (const auto& p : structures()) {
    const std::size_t n = p.nvars();
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& idx : index_tuples(n, k))
        for (unsigned deg = 0; deg <= 3; ++deg)
          for (const auto& m : monomials_of_degree(n, deg)) {
            Form a = Form::basis(n, idx, Poly::term(m, 1));
            CHECK(delta(p, delta(p, a)).is_zero());
            if (k == 0)
              CHECK(delta(p, form_d(a)).is_zero());  // delta vanishes on functions
            else
              CHECK((form_d(delta(p, a)) + delta(p, form_d(a))).is_zero());
          }
  }
}

TEST_CASE("delta requires an involutive bivector when asked") {
  try {
    delta(non_jacobi(), df(var(3, 0)), true);
    FAIL("expected non-involutive");
  } catch (const Error& e) {
    CHECK(e.kind() == "non-involutive");
    CHECK(e.error_class() == ErrorClass::precondition);
  }
}

TEST_CASE("form bracket: two constructions agree and exact forms bracket by {f,g}") {
  Rng rng(36);
  for (const auto& p : structures()) {
    const std::size_t n = p.nvars();
    for (int t = 0; t < 10; ++t) {
      std::uniform_int_distribution<std::size_t> g(0, 2);
      Form a = random_form(rng, n, g(rng), 2), b = random_form(rng, n, g(rng), 2);
      CHECK(form_bracket(p, a, b) == form_bracket_pairing(p, a, b));
      Poly f = random_poly(rng, n, 2), h = random_poly(rng, n, 2);
      CHECK(form_bracket(p, df(f), df(h)) == df(poisson_bracket(p, f, h)));
    }
  }
  Form e0 = df(var(3, 0)), e1 = df(var(3, 1));
  CHECK(form_bracket(so3(), e0, e1) == df(var(3, 2)));
}

TEST_CASE("invariant Schouten identity on seeded random instances") {
  for (unsigned seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> gd(0, 2);
    std::size_t a = gd(rng), b = gd(rng);
    if (a + b == 0) b = 1;
    Multivector u = random_multivector(rng, 3, a, 2), v = random_multivector(rng, 3, b, 2);
    Form w = random_form(rng, 3, a + b - 1, 2);
    INFO("seed " << seed);
    CHECK(schouten_identity_eval(w, u, v).is_zero());
  }
}

TEST_CASE("sharp is a chain map from (forms, d) to (multivectors, d_P)") {
  for (const auto& p : {symplectic_plane(), so3()})
    CHECK_FALSE(chain_map_counterexample(p, 2, 2).has_value());
  // Without Jacobi the map fails to intertwine the differentials.
  CHECK(chain_map_counterexample(non_jacobi(), 2, 1).has_value());
}

TEST_CASE("sharp of an exact form is the Hamiltonian field") {
  Rng rng(37);
  for (int t = 0; t < 20; ++t) {
    Poly f = random_poly(rng, 3, 3);
    CHECK(sharp(so3(), df(f)) == lichnerowicz_dP(so3(), Multivector::scalar(f)));
  }
}
