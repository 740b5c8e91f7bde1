// Acceptance suite: one line per criterion with its verdict and runtime.
// Usage: acceptance <pforge-binary> <golden-dir>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include "corpus.hpp"
#include "pforge/analysis.hpp"
#include "pforge/form.hpp"
#include "pforge/homology.hpp"
#include "pforge/multivector.hpp"
#include "pforge/ncalg.hpp"
#include "pforge/superalg.hpp"
#include "pforge/symplectic.hpp"
#include "support.hpp"

using namespace pforge;
using namespace pforge::testing;

namespace {

Rational parity(std::size_t e) { return e % 2 ? Rational(-1) : Rational(1); }

template <class F>
std::vector<F> basis_fields(std::size_t n, std::size_t k, unsigned max_degree) {
  std::vector<F> out;
  for (const auto& idx : index_tuples(n, k))
    for (unsigned d = 0; d <= max_degree; ++d)
      for (const auto& m : monomials_of_degree(n, d)) out.push_back(F::basis(n, idx, Poly::term(m, 1)));
  return out;
}

MultiMap random_map(Rng& rng, std::size_t dim, std::size_t arity) {
  std::uniform_int_distribution<int> c(-2, 2);
  MultiMap m(dim, arity);
  for (const auto& t : m.tuples()) {
    Vector v(dim);
    for (auto& x : v) x = c(rng);
    m.set(t, v);
  }
  return m;
}

// Every check returns a short note on failure and an empty string on success.
std::string superalgebra_axioms() {
  Rng rng(1001);
  std::uniform_int_distribution<std::size_t> nd(1, 3), gd(0, 3);
  int pairs = 0, triples = 0;
  while (pairs < 200 || triples < 200) {
    std::size_t n = nd(rng);
    std::size_t a = std::min(gd(rng), n), b = std::min(gd(rng), n), c = std::min(gd(rng), n);
    Multivector u = random_multivector(rng, n, a, 2), v = random_multivector(rng, n, b, 2),
                w = random_multivector(rng, n, c, 2);
    if (pairs < 200) {
      if (!(schouten(u, v) == parity(a * b) * schouten(v, u))) return "graded symmetry (multivectors)";
      ++pairs;
    }
    if (triples < 200 && a + b > 0 && b + c > 0 && a + c > 0) {
      Multivector j = parity(a * c) * schouten(schouten(u, v), w) + parity(a * b) * schouten(schouten(v, w), u);
      if (!(j + parity(b * c) * schouten(schouten(w, u), v)).is_zero()) return "graded Jacobi (multivectors)";
      ++triples;
    }
  }
  std::uniform_int_distribution<std::size_t> dm(1, 4), ar(0, 3);
  int maps = 0;
  while (maps < 100) {
    std::size_t dim = dm(rng);
    MultiMap x = random_map(rng, dim, ar(rng)), y = random_map(rng, dim, ar(rng)), z = random_map(rng, dim, ar(rng));
    if (x.arity() + y.arity() == 0 || y.arity() + z.arity() == 0 || x.arity() + z.arity() == 0) continue;
    if (!symmetry_defect(x, y).is_zero()) return "graded symmetry (multilinear maps)";
    if (!jacobi_defect(x, y, z).is_zero()) return "graded Jacobi (multilinear maps)";
    ++maps;
  }
  return {};
}

std::string involutivity() {
  for (const auto& p : {symplectic_plane(), so3(), sl2()}) {
    if (!jacobiator(p).is_zero()) return "jacobiator nonzero";
    const std::size_t n = p.nvars();
    for (std::size_t k = 0; k <= n; ++k) {
      for (const auto& u : basis_fields<Multivector>(n, k, 3))
        if (!lichnerowicz_dP(p, lichnerowicz_dP(p, u)).is_zero()) return "dP o dP";
      for (const auto& a : basis_fields<Form>(n, k, 3)) {
        if (!delta(p, delta(p, a)).is_zero()) return "delta o delta";
        Form da = form_d(a);
        if (k == 0 ? !delta(p, da).is_zero() : !(form_d(delta(p, a)) + delta(p, da)).is_zero())
          return "d delta + delta d";
      }
    }
  }
  Multivector p = non_jacobi(), j = jacobiator(p);
  if (!(j == Multivector::basis(3, {0, 1, 2}, Poly(3, 2)))) return "non-example jacobiator";
  // Cyclic-sum oracle: {x0,{x1,x2}} + {x1,{x2,x0}} + {x2,{x0,x1}} = -1.
  auto br = [&](const Poly& f, const Poly& g) { return pbracket(p, f, g); };
  Poly cyc = br(var(3, 0), br(var(3, 1), var(3, 2))) + br(var(3, 1), br(var(3, 2), var(3, 0))) +
             br(var(3, 2), br(var(3, 0), var(3, 1)));
  if (!(j.coeff({0, 1, 2}) == Poly(3, -2) * cyc)) return "cyclic-sum oracle";
  return {};
}

std::string star_identities() {
  for (const auto& p : {symplectic_plane(), symplectic_r4()}) {
    SymplecticContext ctx = make_context(p);
    const std::size_t n = ctx.n;
    if (!(star(ctx, Form::scalar(Poly(n, 1))) == ctx.vol)) return "*1 != vol";
    if (!(star(ctx, ctx.vol) == Form::scalar(Poly(n, 1)))) return "*vol != 1";
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& a : basis_fields<Form>(n, k, 3)) {
        Form sa = star(ctx, a);
        if (!(star(ctx, sa) == a)) return "** != Id";
        Form lhs = delta(p, a);
        if (k == 0 ? !lhs.is_zero() : !(lhs == parity(k) * star(ctx, form_d(sa))))
          return "delta != (-1)^k *d* at grade " + std::to_string(k);
      }
  }
  return {};
}

std::string chain_map() {
  for (const auto& p : {symplectic_plane(), so3()})
    if (auto bad = chain_map_counterexample(p, 2, 2)) return "counterexample found";
  return {};
}

std::string cohomology_dims() {
  HomologyOptions opt{2, 0, 4, true};
  std::size_t total0 = 0;
  for (const auto& r : poisson_cohomology_dims(symplectic_plane(), opt)) {
    if (r.grade == 0) total0 += r.dim_h;
    if (r.grade > 0 && r.dim_h) return "symplectic plane: H^" + std::to_string(r.grade) + " != 0";
    if (r.grade == 0 && r.weight > 0 && r.dim_h) return "symplectic plane: H^0 outside weight 0";
  }
  if (total0 != 1) return "symplectic plane: H^0 total != 1";
  std::vector<std::size_t> h0, cas;
  for (const auto& r : poisson_cohomology_dims(so3(), opt))
    if (r.grade == 0) h0.push_back(r.dim_h);
  if (h0 != std::vector<std::size_t>{1, 0, 1, 0, 1}) return "so(3) H^0 by weight";
  for (unsigned d = 0; d <= 4; ++d)
    cas.push_back(casimir_basis(so3(), d).size() - (d ? casimir_basis(so3(), d - 1).size() : 0));
  if (cas != h0) return "so(3) H^0 differs from Casimir count";
  return {};
}

std::string example_casimirs() {
  auto c = casimir_basis(bivector(2, {{0, 1, "x0"}}), 6);
  if (c.size() != 1 || !(c[0] == Poly(2, 1))) return "non-constant Casimir found";
  return {};
}

std::string integrability() {
  Rng rng(1007);
  for (const auto& s : poisson_catalog())
    for (int t = 0; t < 20; ++t)
      if (!integrability_at(s.p, random_point(rng, s.p.nvars())).integrable) return s.name;
  if (integrability_at(non_jacobi(), Vector{0, 0, 0}).integrable) return "non-example integrable at origin";
  return {};
}

std::string momentum() {
  LieAlgebraSC r2(2, "abelian2");
  CocycleReport t = momentum_cocycle(symplectic_plane(), r2, {var(2, 1), var(2, 0)});
  if (!(t.c[0][1] == Poly(2, 1))) return "translation c[1][2] != 1";
  if (t.cyclic_zero != std::optional<bool>(true)) return "translation cyclic identity";
  LieAlgebraSC g;
  for (const auto& h : lie_catalog())
    if (h.name == "so3") g = h;
  CocycleReport z = momentum_cocycle(so3(), g, {var(3, 0), var(3, 1), var(3, 2)});
  for (const auto& row : z.c)
    for (const auto& e : row)
      if (!e.is_zero()) return "so(3) cocycle nonzero";
  if (z.cyclic_zero != std::optional<bool>(true)) return "so(3) cyclic identity";
  return {};
}

std::string noncommutative() {
  DerivationReport m2 = derivations(matrix_algebra(2));
  if (m2.basis.size() != 3 || !m2.all_inner) return "Der(M2)";
  AlgebraSC t3 = truncated_polynomial_algebra({3});
  if (derivations(t3).basis.size() != 2) return "Der(Q[t]/(t^3))";
  if (!submanifold_check(t3, {Vector{0, 0, 1}}).submanifold) return "submanifold (t^2)";
  auto catalog = lie_catalog();
  if (catalog.size() != 20) return "catalog size";
  for (const auto& g : catalog) {
    if (g.dim > 4) return "catalog dimension";
    for (const auto& sub : coordinate_subalgebras(g))
      if (!bott_forms(g, sub).flat) return "Bott curvature on " + g.name;
  }
  return {};
}

std::string koszul() {
  for (const auto& a : {product_of_fields(1), product_of_fields(2), truncated_polynomial_algebra({3}),
                        truncated_polynomial_algebra({2, 2})}) {
    KoszulReport r = koszul_check(a);
    if (!r.passed) return a.name + ": " + r.counterexample;
  }
  return {};
}

std::string schouten_identity() {
  for (unsigned seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> gd(0, 2);
    std::size_t a = gd(rng), b = gd(rng);
    if (a + b == 0) b = 1;
    Multivector u = random_multivector(rng, 3, a, 2), v = random_multivector(rng, 3, b, 2);
    Form w = random_form(rng, 3, a + b - 1, 2);
    if (!schouten_identity_eval(w, u, v).is_zero()) return "seed " + std::to_string(seed);
  }
  return {};
}

std::string cli_determinism(const std::string& cli, const fs::path& golden) {
  for (const auto& c : load_cases(golden)) {
    RunResult first = run_cli(cli, golden, c.args), second = run_cli(cli, golden, c.args);
    if (first.output != second.output || first.exit_code != second.exit_code) return c.name + " not deterministic";
    if (first.exit_code != c.exit_code) return c.name + " exit code";
    if (first.output != read_text(golden / "expected" / (c.name + ".out"))) return c.name + " differs from golden";
  }
  for (const auto& entry : fs::directory_iterator(golden / "inputs")) {
    if (entry.path().extension() != ".json") continue;
    std::string err = roundtrip_file(entry.path());
    if (!err.empty()) return entry.path().filename().string() + ": " + err;
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <pforge-binary> <golden-dir>\n";
    return 2;
  }
  const std::string cli = fs::absolute(argv[1]).string();
  const fs::path golden = argv[2];
  struct Criterion {
    int id;
    std::string title;
    double limit;
    std::function<std::string()> check;
  };
  std::vector<Criterion> criteria{
      {1, "superalgebra axioms (s1), (s2)", 10, superalgebra_axioms},
      {2, "involutivity and coboundaries", 10, involutivity},
      {3, "star identities on R^2 and R^4", 30, star_identities},
      {4, "sharp is a chain map", 10, chain_map},
      {5, "cohomology dimensions", 60, cohomology_dims},
      {6, "x0 d0^d1 has only constant Casimirs", 5, example_casimirs},
      {7, "pointwise integrability", 5, integrability},
      {8, "momentum cocycles", 2, momentum},
      {9, "noncommutative calculus", 30, noncommutative},
      {10, "Koszul differential as supercommutator", 10, koszul},
      {11, "invariant Schouten identity, seeds 0..199", 20, schouten_identity},
      {12, "CLI determinism and round-trip", 5, [&] { return cli_determinism(cli, golden); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    try {
      note = c.check();
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (note.empty() && secs > c.limit) note = "over time limit";
    bool ok = note.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.title << "  ("
              << std::fixed << std::setprecision(2) << secs << " s / " << std::setprecision(0) << c.limit
              << " s)" << (ok ? "" : "  " + note) << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all 12 criteria passed\n");
  return failed ? 1 : 0;
}
