#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include <omp.h>
#include <unistd.h>

#include <CLI11.hpp>

#include "pforge/analysis.hpp"
#include "pforge/form.hpp"
#include "pforge/homology.hpp"
#include "pforge/io.hpp"
#include "pforge/multivector.hpp"
#include "pforge/ncalg.hpp"
#include "pforge/superalg.hpp"
#include "pforge/symplectic.hpp"

using namespace pforge;
using io::Json;

namespace {

struct Options {
  std::string input, format = "json";
  unsigned long seed = 0;
  int jobs = 0;

  std::string other, field, form, liealg, lambda, gens, algebra, ideal, sub, dist;
  std::string point, complex = "lich";
  std::size_t max_grade = 2, dim = 3, trials = 100;
  long min_weight = 0, max_weight = 4;
  unsigned max_degree = 6, degree = 4;
  bool coordinate = false;
};

bool styled() {
  const char* c = std::getenv("PFORGE_COLOR");
  if (c && std::string(c) == "0") return false;
  return isatty(STDOUT_FILENO);
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, const std::string& pad, std::ostream& out, bool color) {
  auto key = [&](const std::string& k) { return color ? "\x1b[1m" + k + "\x1b[0m" : k; };
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << pad << key(k) << ":\n";
      render(v, pad + "  ", out, color);
    } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
      out << pad << key(k) << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          std::string line;
          for (const auto& [ek, ev] : e.items())
            line += (line.empty() ? "" : "  ") + ek + "=" + (ev.is_primitive() ? scalar_text(ev) : ev.dump());
          out << pad << "  - " << line << "\n";
        } else {
          out << pad << "  - " << e.dump() << "\n";
        }
      }
    } else if (v.is_array()) {
      out << pad << key(k) << ": " << v.dump() << "\n";
    } else {
      out << pad << key(k) << ": " << scalar_text(v) << "\n";
    }
  }
}

void emit(const Json& j, const Options& o) {
  if (o.format == "text")
    render(j, "", std::cout, styled());
  else
    std::cout << io::dump(j);
}

Multivector bivector(const Options& o) {
  if (o.input.empty()) fail("missing-input", "-i/--input is required", ErrorClass::input, "-i");
  Multivector p = io::to_multivector(io::read_file(o.input));
  if (p.grade() != 2)
    fail("grade-mismatch", "input must be a bivector (grade 2)", ErrorClass::input,
         std::to_string(p.grade()));
  return p;
}

std::string need(const std::string& path, const std::string& flag) {
  if (path.empty()) fail("missing-input", flag + " is required", ErrorClass::input, flag);
  return path;
}

Json rows_json(const std::vector<HomologyRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"grade", r.grade}, {"weight", r.weight}, {"dim_C", r.dim_c},
                   {"rank_in", r.rank_in}, {"rank_out", r.rank_out}, {"dim_H", r.dim_h}});
  return out;
}

Json curvature_json(const std::vector<CurvatureEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries)
    out.push_back({{"i", e.i}, {"j", e.j}, {"value", io::from_matrix(e.value)}});
  return out;
}

Json table_json(const ConnectionTable& t) {
  return {{"module_basis", io::from_subspace(t.module_basis)},
          {"nabla", io::from_endos(t.nabla)},
          {"curvature", curvature_json(t.curvature)},
          {"flat", t.flat},
          {"well_defined", t.well_defined}};
}

/// Dense random antisymmetric map with small integer values.
MultiMap random_map(std::size_t dim, std::size_t arity, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  MultiMap m(dim, arity);
  for (const auto& t : m.tuples()) {
    Vector v(dim);
    for (auto& x : v) x = coeff(rng);
    m.set(t, v);
  }
  return m;
}

Json oracle_super(const Options& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> arity(0, 3);
  std::size_t s1 = 0, s2 = 0, skipped = 0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    MultiMap a = random_map(o.dim, arity(rng), rng), b = random_map(o.dim, arity(rng), rng),
             c = random_map(o.dim, arity(rng), rng);
    if (a.arity() + b.arity() == 0 || b.arity() + c.arity() == 0 || a.arity() + c.arity() == 0) {
      ++skipped;
      continue;
    }
    if (!symmetry_defect(a, b).is_zero()) ++s1;
    if (!jacobi_defect(a, b, c).is_zero()) ++s2;
  }
  return {{"seed", o.seed}, {"dim", o.dim}, {"trials", o.trials}, {"skipped_degenerate", skipped},
          {"s1_failures", s1}, {"s2_failures", s2}, {"passed", s1 == 0 && s2 == 0}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pforge: exact Poisson geometry and noncommutative calculus"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-i,--input", o.input, "input file (bivector or field JSON, - for stdin)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "seed for randomized commands");
  app.add_option("--jobs", o.jobs, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  std::function<Json()> run;
  auto sub = [&](const std::string& name, const std::string& help, std::function<Json()> body,
                 CLI::App* parent = nullptr) {
    CLI::App* s = (parent ? parent : &app)->add_subcommand(name, help);
    s->callback([&run, body] { run = body; });
    return s;
  };

  auto* check = sub("check", "jacobiator of a bivector", [&] {
    Multivector j = jacobiator(bivector(o));
    return Json{{"jacobiator_zero", j.is_zero()}, {"jacobiator", io::from_multivector(j)}};
  });
  (void)check;

  auto* schouten_cmd = sub("schouten", "coordinate Schouten bracket [u, v]", [&] {
    Multivector u = io::to_multivector(io::read_file(need(o.input, "-i/--input")));
    Multivector v = io::to_multivector(io::read_file(need(o.other, "--with")));
    return Json{{"result", io::from_multivector(schouten(u, v))}};
  });
  schouten_cmd->add_option("--with", o.other, "second multivector");

  auto* dp = sub("dp", "Lichnerowicz differential [p, u]", [&] {
    Multivector p = bivector(o);
    Multivector u = io::to_multivector(io::read_file(need(o.field, "--field")));
    return Json{{"result", io::from_multivector(lichnerowicz_dP(p, u))}};
  });
  dp->add_option("--field", o.field, "multivector u");

  auto* delta_cmd = sub("delta", "Koszul-Brylinski operator on a form", [&] {
    Multivector p = bivector(o);
    Form a = io::to_form(io::read_file(need(o.form, "--form")));
    Form r = o.coordinate ? delta_coordinate(p, a) : delta(p, a, true);
    return Json{{"result", io::from_form(r)}};
  });
  delta_cmd->add_option("--form", o.form, "form a");
  delta_cmd->add_flag("--coordinate", o.coordinate, "use the coordinate expansion");

  auto* bracket_cmd = sub("bracket", "bracket of forms", [&] {
    Multivector p = bivector(o);
    Form a = io::to_form(io::read_file(need(o.form, "--form")));
    Form b = io::to_form(io::read_file(need(o.other, "--with")));
    Form r = form_bracket(p, a, b);
    return Json{{"result", io::from_form(r)},
                {"routes_agree", r == form_bracket_pairing(p, a, b)}};
  });
  bracket_cmd->add_option("--form", o.form, "form a");
  bracket_cmd->add_option("--with", o.other, "form b");

  auto* star_cmd = sub("star", "symplectic star operator", [&] {
    SymplecticContext ctx = make_context(bivector(o));
    Form a = io::to_form(io::read_file(need(o.form, "--form")));
    return Json{{"result", io::from_form(star(ctx, a))}};
  });
  star_cmd->add_option("--form", o.form, "form a");

  auto* coh = sub("cohomology", "Poisson cohomology or canonical homology dimensions", [&] {
    Multivector p = bivector(o);
    HomologyOptions opt{o.max_grade, o.min_weight, o.max_weight, o.jobs != 1};
    bool lich = o.complex == "lich";
    auto rows = lich ? poisson_cohomology_dims(p, opt) : canonical_homology_dims(p, opt);
    return Json{{"complex", o.complex}, {"max_grade", o.max_grade}, {"min_weight", o.min_weight},
                {"max_weight", o.max_weight}, {"rows", rows_json(rows)}};
  });
  coh->add_option("--complex", o.complex)->check(CLI::IsMember({"lich", "can"}));
  coh->add_option("--max-grade", o.max_grade);
  coh->add_option("--min-weight", o.min_weight);
  coh->add_option("--max-weight", o.max_weight);

  auto* rank_cmd = sub("rank", "rank of p at a rational point", [&] {
    Multivector p = bivector(o);
    PointReport r = rank_at(p, io::parse_point(need(o.point, "--point"), p.nvars()));
    return Json{{"point", io::from_vector(r.point)}, {"rank", r.rank},
                {"image_basis", io::from_subspace(r.image_basis)}};
  });
  rank_cmd->add_option("--point", o.point, "comma-separated rationals");

  auto* cas = sub("casimir", "polynomial Casimirs up to a degree", [&] {
    Multivector p = bivector(o);
    auto basis = casimir_basis(p, o.max_degree);
    bool only_constants = basis.size() == 1 && basis[0].is_constant();
    return Json{{"max_degree", o.max_degree}, {"casimirs", io::from_polys(basis)},
                {"only_constants", only_constants}};
  });
  cas->add_option("--max-degree", o.max_degree);

  auto* integ = sub("integrable", "pointwise involutivity of the characteristic distribution", [&] {
    Multivector p = bivector(o);
    IntegrabilityReport r = integrability_at(p, io::parse_point(need(o.point, "--point"), p.nvars()));
    Json j{{"integrable", r.integrable}};
    if (r.witness) {
      j["witness"] = {r.witness->first, r.witness->second};
      j["bracket_value"] = io::from_vector(r.bracket_value);
    }
    return j;
  });
  integ->add_option("--point", o.point, "comma-separated rationals");

  auto* coc = sub("cocycle", "momentum-map cocycle of a Lie algebra action", [&] {
    Multivector p = bivector(o);
    LieAlgebraSC g = io::to_lie(io::read_file(need(o.liealg, "--liealg")));
    auto lambda = io::to_polys(io::read_file(need(o.lambda, "--lambda")), p.nvars());
    CocycleReport r = momentum_cocycle(p, g, lambda);
    Json c = Json::array();
    for (const auto& row : r.c) c.push_back(io::from_polys(row));
    Json j{{"c", c}, {"antisymmetric", r.antisymmetric}, {"constant", r.constant},
           {"homomorphic", r.homomorphic}};
    j["cyclic_zero"] = r.cyclic_zero ? Json(*r.cyclic_zero) : Json(nullptr);
    return j;
  });
  coc->add_option("--liealg", o.liealg, "Lie algebra JSON");
  coc->add_option("--lambda", o.lambda, "list of polynomials l(e_i)");

  auto* ideal_cmd = sub("ideal", "Poisson ideal check at bounded degree", [&] {
    Multivector p = bivector(o);
    auto gens = io::to_polys(io::read_file(need(o.gens, "--gens")), p.nvars());
    IdealReport r = ideal_check(p, gens, o.degree);
    Json obs = Json::array();
    for (const auto& ob : r.obligations) {
      Json e{{"generator", ob.generator}, {"coordinate", ob.coordinate}, {"bracket", ob.bracket.str()}};
      if (ob.multipliers) e["multipliers"] = io::from_polys(*ob.multipliers);
      if (!ob.reason.empty()) e["reason"] = ob.reason;
      if (ob.point) e["point"] = io::from_vector(*ob.point);
      obs.push_back(e);
    }
    return Json{{"verdict", to_string(r.verdict)}, {"degree", o.degree}, {"obligations", obs}};
  });
  ideal_cmd->add_option("--gens", o.gens, "list of generator polynomials");
  ideal_cmd->add_option("--degree", o.degree, "multiplier degree bound");

  auto* oracle = app.add_subcommand("oracle", "dense finite-dimensional oracles");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  auto* osup = sub("super", "superalgebra axioms on random multilinear maps",
                   [&] { return oracle_super(o); }, oracle);
  osup->add_option("--dim", o.dim)->check(CLI::Range(1, 4));
  osup->add_option("--trials", o.trials);
  auto* okos = sub("koszul", "Koszul differential as a supercommutator", [&] {
    AlgebraSC a = io::to_algebra(io::read_file(need(o.algebra, "--algebra")));
    KoszulReport r = koszul_check(a, o.max_grade);
    return Json{{"passed", r.passed}, {"der_dim", r.der_dim}, {"diff_dim", r.diff_dim},
                {"form_dims", r.form_dims}, {"counterexample", r.counterexample}};
  }, oracle);
  okos->add_option("--algebra", o.algebra, "algebra JSON");
  okos->add_option("--max-grade", o.max_grade);

  auto* nc = app.add_subcommand("ncalg", "noncommutative calculus on finite algebras");
  nc->require_subcommand(1);
  nc->fallthrough();
  auto algebra = [&] { return io::to_algebra(io::read_file(need(o.algebra, "--algebra"))); };
  auto lie = [&] {
    return io::to_lie(io::read_file(need(o.algebra.empty() ? o.liealg : o.algebra, "--algebra")));
  };

  auto* der = sub("der", "derivations, inner derivations and center", [&] {
    AlgebraSC a = algebra();
    AlgebraReport ar = validate_algebra(a);
    DerivationReport r = derivations(a);
    return Json{{"dim", r.basis.size()}, {"basis", io::from_endos(r.basis)},
                {"inner_dim", r.inner.size()}, {"all_inner", r.all_inner},
                {"closed", r.closed}, {"center", io::from_subspace(ar.center)}};
  }, nc);
  der->add_option("--algebra", o.algebra);

  auto* subm = sub("submanifold", "submanifold algebra check for an ideal", [&] {
    AlgebraSC a = algebra();
    a.validate();
    Subspace i = io::to_subspace(io::read_file(need(o.ideal, "--ideal")), a.dim);
    IdealDerivations d = ideal_derivations(a, i);
    return Json{{"submanifold", d.rank == d.target.size()}, {"rank", d.rank},
                {"target_dim", d.target.size()}, {"der_i_dim", d.der_i.size()},
                {"der_i0_dim", d.der_i0.size()}, {"kernel_matches", d.kernel_matches}};
  }, nc);
  subm->add_option("--algebra", o.algebra);
  subm->add_option("--ideal", o.ideal);

  auto* quot = sub("quotient", "quotient manifold algebra check for a subalgebra", [&] {
    AlgebraSC a = algebra();
    QuotientReport r = quotient_check(a, io::to_subspace(io::read_file(need(o.sub, "--sub")), a.dim));
    return Json{{"q1", r.q1}, {"q2", r.q2}, {"q3", r.q3},
                {"quotient_manifold", r.q1 && r.q2 && r.q3},
                {"q_b_dim", r.q_b.size()}, {"v_b_dim", r.v_b.size()},
                {"center_b", io::from_subspace(r.center_b)},
                {"b_cap_center", io::from_subspace(r.b_cap_center)},
                {"invariants", io::from_subspace(r.invariants)},
                {"der_b_dim", r.der_b_dim}, {"restriction_rank", r.restriction_rank}};
  }, nc);
  quot->add_option("--algebra", o.algebra);
  quot->add_option("--sub", o.sub);

  auto* bq = sub("bott-quotient", "Bott connection on L/L0", [&] {
    LieAlgebraSC g = lie();
    return table_json(bott_quotient(g, io::to_subspace(io::read_file(need(o.sub, "--sub")), g.dim)));
  }, nc);
  bq->add_option("--algebra,--liealg", o.algebra, "Lie algebra JSON");
  bq->add_option("--sub", o.sub);

  auto* bf = sub("bott-forms", "Bott connection on the annihilator of L0", [&] {
    LieAlgebraSC g = lie();
    return table_json(bott_forms(g, io::to_subspace(io::read_file(need(o.sub, "--sub")), g.dim)));
  }, nc);
  bf->add_option("--algebra,--liealg", o.algebra, "Lie algebra JSON");
  bf->add_option("--sub", o.sub);

  auto* bi = sub("bott-integral", "Bott connection on an integral submanifold algebra", [&] {
    AlgebraSC a = algebra();
    EndoList d = io::to_endos(io::read_file(need(o.dist, "--dist")), a.dim);
    IntegralReport r = bott_integral(a, d, io::to_subspace(io::read_file(need(o.ideal, "--ideal")), a.dim));
    Json j{{"integral", r.integral}};
    if (!r.integral) {
      j["reason"] = r.reason;
      return j;
    }
    j["forms_dim"] = r.forms_dim;
    j["forms_d_dim"] = r.forms_d_dim;
    j["forms_d_cap_i_dim"] = r.forms_i_cap_dim;
    j["gamma_dim"] = r.gamma.size();
    j["acting"] = io::from_endos(r.acting);
    j["connection"] = table_json(r.table);
    return j;
  }, nc);
  bi->add_option("--algebra", o.algebra);
  bi->add_option("--ideal", o.ideal);
  bi->add_option("--dist", o.dist, "list of derivation matrices spanning D");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (o.jobs > 0) omp_set_num_threads(o.jobs);
  try {
    emit(run(), o);
  } catch (const Error& e) {
    Json err{{"error", {{"kind", e.kind()}, {"message", e.what()}, {"witness", e.witness()}}}};
    std::cerr << io::dump(err);
    return e.error_class() == ErrorClass::precondition ? 2 : 1;
  } catch (const std::exception& e) {
    Json err{{"error", {{"kind", "internal"}, {"message", e.what()}, {"witness", ""}}}};
    std::cerr << io::dump(err);
    return 1;
  }
  return 0;
}
