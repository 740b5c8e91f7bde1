#pragma once

#include <random>
#include <string>
#include <vector>

#include "pforge/analysis.hpp"
#include "pforge/graded.hpp"
#include "pforge/lie.hpp"
#include "pforge/multivector.hpp"
#include "pforge/poly.hpp"

namespace pforge::testing {

using Rng = std::mt19937_64;

inline Rational small_rational(Rng& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Random polynomial of degree <= max_degree with a few nonzero terms.
inline Poly random_poly(Rng& rng, std::size_t n, unsigned max_degree, std::size_t terms = 3) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  Poly p(n);
  while (p.is_zero()) {
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<unsigned> e(n, 0);
      unsigned d = deg(rng);
      std::uniform_int_distribution<std::size_t> var(0, n - 1);
      for (unsigned k = 0; k < d && n > 0; ++k) ++e[var(rng)];
      p.add_term(Monomial(e), small_rational(rng));
    }
  }
  return p;
}

template <Variance V>
GradedField<V> random_field(Rng& rng, std::size_t n, std::size_t grade, unsigned max_degree) {
  GradedField<V> f(n, grade);
  auto tuples = index_tuples(n, grade);
  if (tuples.empty()) return f;
  std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
  while (f.is_zero())
    for (int t = 0; t < 2; ++t) f.add_term(tuples[pick(rng)], random_poly(rng, n, max_degree, 2));
  return f;
}

inline Multivector random_multivector(Rng& rng, std::size_t n, std::size_t grade, unsigned max_degree) {
  return random_field<Variance::contravariant>(rng, n, grade, max_degree);
}

inline Form random_form(Rng& rng, std::size_t n, std::size_t grade, unsigned max_degree) {
  return random_field<Variance::covariant>(rng, n, grade, max_degree);
}

inline Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i); }

/// Bivector from (i, j, coefficient text) triples.
inline Multivector bivector(std::size_t n, std::initializer_list<std::tuple<int, int, const char*>> terms) {
  Multivector p(n, 2);
  for (const auto& [i, j, c] : terms)
    p.add_unsorted({static_cast<std::size_t>(i), static_cast<std::size_t>(j)}, Poly::parse(c, n));
  return p;
}

inline Multivector symplectic_plane() { return bivector(2, {{0, 1, "1"}}); }
inline Multivector symplectic_r4() { return bivector(4, {{0, 1, "1"}, {2, 3, "1"}, {0, 2, "1/2"}}); }
inline Multivector so3() { return bivector(3, {{0, 1, "x2"}, {1, 2, "x0"}, {2, 0, "x1"}}); }
inline Multivector sl2() { return bivector(3, {{0, 1, "2*x1"}, {0, 2, "-2*x2"}, {1, 2, "x0"}}); }
inline Multivector non_jacobi() { return bivector(3, {{0, 1, "1"}, {2, 0, "x0"}}); }

struct NamedStructure {
  std::string name;
  Multivector p;
};

/// Poisson structures used for sweeps: the Lie-Poisson structure of every
/// catalog algebra plus a few non-linear ones.
inline std::vector<NamedStructure> poisson_catalog() {
  std::vector<NamedStructure> out{{"symplectic-plane", symplectic_plane()},
                                  {"symplectic-r4", symplectic_r4()},
                                  {"so3", so3()},
                                  {"sl2", sl2()},
                                  {"x0-plane", bivector(2, {{0, 1, "x0"}})},
                                  {"quadratic-plane", bivector(2, {{0, 1, "x0^2 + x1^2"}})},
                                  {"rank2-r3", bivector(3, {{0, 1, "x2^2"}})}};
  for (const auto& g : lie_catalog()) out.push_back({"lie-poisson " + g.name, lie_poisson(g)});
  return out;
}

inline Vector random_point(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = small_rational(rng, -5, 5);
  return v;
}

}  // namespace pforge::testing

#include <ostream>

namespace pforge {

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

template <Variance V>
std::ostream& operator<<(std::ostream& os, const GradedField<V>& f) {
  os << (V == Variance::covariant ? "form" : "mv") << "(n=" << f.nvars() << ",k=" << f.grade() << ")[";
  for (const auto& [idx, c] : f.terms()) {
    os << " (" << c.str() << ")";
    for (auto i : idx) os << (V == Variance::covariant ? " dx" : " d") << i;
    os << ";";
  }
  return os << " ]";
}

}  // namespace pforge
