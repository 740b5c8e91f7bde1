#include <doctest.h>

#include "pforge/analysis.hpp"
#include "pforge/multivector.hpp"
#include "pforge/superalg.hpp"
#include "support.hpp"

using namespace pforge;
using namespace pforge::testing;

namespace {

Rational parity(std::size_t e) { return e % 2 ? Rational(-1) : Rational(1); }

// {x_i, {x_j, x_k}} + cyclic, straight from the bracket of functions.
Poly cyclic_sum(const Multivector& p, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = p.nvars();
  auto br = [&](const Poly& f, const Poly& g) { return pbracket(p, f, g); };
  return br(var(n, i), br(var(n, j), var(n, k))) + br(var(n, j), br(var(n, k), var(n, i))) +
         br(var(n, k), br(var(n, i), var(n, j)));
}

}  // namespace

TEST_CASE("basis terms normalize with the permutation sign") {
  Multivector u = Multivector::basis(3, {1, 0}, Poly(3, 2));
  CHECK(u.coeff({0, 1}) == Poly(3, -2));
  CHECK(Multivector::basis(3, {1, 1}, Poly(3, 1)).is_zero());
  CHECK(Multivector::basis(3, {2, 0, 1}, Poly(3, 1)).coeff({0, 1, 2}) == Poly(3, 1));
}

TEST_CASE("wedge is graded commutative") {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<std::size_t> g(0, 2);
    std::size_t a = g(rng), b = g(rng);
    Multivector u = random_multivector(rng, 3, a, 2), v = random_multivector(rng, 3, b, 2);
    CHECK(mv_wedge(u, v) == parity(a * b) * mv_wedge(v, u));
  }
}

TEST_CASE("low-grade Schouten brackets reduce to classical operations") {
  Rng rng(22);
  for (int t = 0; t < 40; ++t) {
    Multivector x = random_multivector(rng, 3, 1, 2), y = random_multivector(rng, 3, 1, 2);
    Poly f = random_poly(rng, 3, 3);
    CHECK(schouten(x, y) == vf_bracket(x, y));
    CHECK(schouten(x, Multivector::scalar(f)).as_poly() == apply_vector_field(x, f));
    CHECK(schouten(Multivector::scalar(f), x) == schouten(x, Multivector::scalar(f)));
    CHECK(schouten(Multivector::scalar(f), Multivector::scalar(f)).is_zero());
    // [X, Y](f) = X(Y(f)) - Y(X(f)).
    CHECK(apply_vector_field(vf_bracket(x, y), f) ==
          apply_vector_field(x, apply_vector_field(y, f)) - apply_vector_field(y, apply_vector_field(x, f)));
  }
}

TEST_CASE("Schouten bracket: graded symmetry on random pairs") {
  Rng rng(23);
  std::uniform_int_distribution<std::size_t> nd(1, 3), gd(0, 3);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = nd(rng);
    std::size_t a = std::min(gd(rng), n), b = std::min(gd(rng), n);
    Multivector u = random_multivector(rng, n, a, 2), v = random_multivector(rng, n, b, 2);
    if (u.is_zero() || v.is_zero()) continue;
    CHECK(schouten(u, v) == parity(a * b) * schouten(v, u));
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("Schouten bracket: graded Jacobi on random triples") {
  Rng rng(24);
  std::uniform_int_distribution<std::size_t> nd(1, 3), gd(0, 3);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = nd(rng);
    std::size_t a = std::min(gd(rng), n), b = std::min(gd(rng), n), c = std::min(gd(rng), n);
    // Two functions bracket to zero without a grade; such triples are degenerate.
    if (a + b == 0 || b + c == 0 || a + c == 0) continue;
    Multivector u = random_multivector(rng, n, a, 2), v = random_multivector(rng, n, b, 2),
                w = random_multivector(rng, n, c, 2);
    ++checked;
    Multivector j = parity(a * c) * schouten(schouten(u, v), w) +
                    parity(a * b) * schouten(schouten(v, w), u);
    Multivector k = parity(b * c) * schouten(schouten(w, u), v);
    CHECK((j + k).is_zero());
  }
  CHECK(checked > 120);
}

TEST_CASE("Schouten bracket is a graded derivation of the wedge") {
  Rng rng(25);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<std::size_t> gd(0, 2);
    std::size_t a = gd(rng), b = gd(rng), c = gd(rng);
    Multivector u = random_multivector(rng, 3, a, 2), v = random_multivector(rng, 3, b, 1),
                w = random_multivector(rng, 3, c, 1);
    if (a == 0) continue;
    // [u, v ^ w] = [u, v] ^ w + (-1)^{(a-1) b} v ^ [u, w]
    Multivector lhs = schouten(u, mv_wedge(v, w));
    Multivector rhs = mv_wedge(schouten(u, v), w) + parity((a - 1) * b) * mv_wedge(v, schouten(u, w));
    if (lhs.grade() == rhs.grade()) CHECK(lhs == rhs);
  }
}

TEST_CASE("coordinate Schouten matches the supercommutator of truncated actions") {
  Rng rng(26);
  std::uniform_int_distribution<int> cc(-2, 2);
  int compared = 0;
  for (std::size_t gu = 0; gu <= 2; ++gu)
    for (std::size_t gv = 0; gv <= 2; ++gv) {
      if (gu + gv == 0) continue;
      for (int rep = 0; rep < 3; ++rep) {
        auto make = [&](std::size_t g) {
          Multivector u(2, g);
          for (const auto& idx : index_tuples(2, g))
            for (const auto& m : monomials_of_degree(2, static_cast<unsigned>(g)))
              u.add_term(idx, Poly::term(m, Rational(cc(rng))));
          return u;
        };
        Multivector u = make(gu), v = make(gv);
        CHECK(truncated_action(schouten(u, v), 3) ==
              supercomm(truncated_action(u, 3), truncated_action(v, 3)));
        ++compared;
      }
    }
  CHECK(compared == 24);
}

TEST_CASE("jacobiator against the cyclic-sum oracle") {
  auto check = [](const Multivector& p) {
    Multivector j = jacobiator(p);
    for (const auto& idx : index_tuples(p.nvars(), 3))
      CHECK(j.coeff(idx) == Poly(p.nvars(), -2) * cyclic_sum(p, idx[0], idx[1], idx[2]));
  };
  check(so3());
  check(sl2());
  check(non_jacobi());
  Rng rng(27);
  for (int t = 0; t < 30; ++t) check(random_multivector(rng, 3, 2, 2));
  for (int t = 0; t < 10; ++t) check(random_multivector(rng, 4, 2, 1));
}

TEST_CASE("involutive structures") {
  CHECK(jacobiator(symplectic_plane()).is_zero());
  CHECK(jacobiator(so3()).is_zero());
  CHECK(jacobiator(sl2()).is_zero());
  for (const auto& s : poisson_catalog()) {
    INFO(s.name);
    CHECK(jacobiator(s.p).is_zero());
  }
  Multivector j = jacobiator(non_jacobi());
  CHECK(j == Multivector::basis(3, {0, 1, 2}, Poly(3, 2)));
}

TEST_CASE("Lichnerowicz differential squares to zero") {
  Rng rng(28);
  for (const auto& p : {symplectic_plane(), so3(), sl2()}) {
    const std::size_t n = p.nvars();
    for (std::size_t k = 0; k <= n; ++k)
      for (int t = 0; t < 6; ++t) {
        Multivector u = random_multivector(rng, n, k, 3);
        CHECK(lichnerowicz_dP(p, lichnerowicz_dP(p, u)).is_zero());
      }
  }
  Multivector p = symplectic_plane();
  CHECK(lichnerowicz_dP(p, Multivector::scalar(var(2, 0))) == Multivector::basis(2, {1}, Poly(2, 1)));
  CHECK(lichnerowicz_dP(p, Multivector::scalar(var(2, 1))) == Multivector::basis(2, {0}, Poly(2, -1)));
}

TEST_CASE("bivector from a matrix") {
  Poly z(3), x2 = var(3, 2);
  std::vector<std::vector<Poly>> table{{z, x2, -var(3, 1)}, {-x2, z, var(3, 0)}, {var(3, 1), -var(3, 0), z}};
  CHECK(bivector_from_matrix(table) == so3());
}
