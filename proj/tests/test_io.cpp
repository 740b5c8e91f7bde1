#include <doctest.h>

#include "pforge/error.hpp"
#include "pforge/io.hpp"
#include "support.hpp"

using namespace pforge;
using namespace pforge::testing;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "none";
}

}  // namespace

TEST_CASE("multivector JSON") {
  auto j = io::parse_text(R"({"n": 3, "grade": 2, "terms": [{"idx": [1, 0], "coeff": "x2"}]})");
  Multivector u = io::to_multivector(j);
  CHECK(u.coeff({0, 1}) == Poly::parse("-x2", 3));
  CHECK(io::to_multivector(io::from_multivector(u)) == u);
  CHECK(io::dump(io::from_multivector(u)) ==
        io::dump(io::from_multivector(io::to_multivector(io::from_multivector(u)))));
  CHECK(kind_of([] {
          io::to_multivector(io::parse_text(R"({"n": 2, "grade": 1, "terms": [], "extra": 1})"));
        }) == "unknown-field");
  CHECK(kind_of([] {
          io::to_multivector(io::parse_text(R"({"n": 2, "grade": 1, "terms": [{"idx": [2], "coeff": "1"}]})"));
        }) == "invariant-violation");
  CHECK(kind_of([] {
          io::to_multivector(io::parse_text(R"({"n": 2, "grade": 1, "terms": [{"idx": [0], "coeff": "x0^"}]})"));
        }) == "parse-error");
  CHECK(kind_of([] { io::to_multivector(io::parse_text(R"({"n": 2, "grade": 1})")); }) == "missing-field");
}

TEST_CASE("random fields survive print and parse") {
  Rng rng(81);
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<std::size_t> g(0, 3);
    Multivector u = random_multivector(rng, 3, g(rng), 3);
    Form a = random_form(rng, 3, g(rng), 3);
    CHECK(io::to_multivector(io::parse_text(io::dump(io::from_multivector(u)))) == u);
    CHECK(io::to_form(io::parse_text(io::dump(io::from_form(a)))) == a);
  }
}

TEST_CASE("form JSON requires its kind") {
  CHECK(kind_of([] { io::to_form(io::parse_text(R"({"n": 2, "grade": 0, "terms": []})")); }) ==
        "missing-field");
  CHECK(kind_of([] {
          io::to_multivector(io::parse_text(R"({"kind": "form", "n": 2, "grade": 0, "terms": []})"));
        }) == "invalid-type");
}

TEST_CASE("algebras and Lie algebras") {
  for (const auto& a : {matrix_algebra(2), truncated_polynomial_algebra({2, 2}, "st"), product_of_fields(2)}) {
    AlgebraSC b = io::to_algebra(io::parse_text(io::dump(io::from_algebra(a))));
    CHECK(b.mult == a.mult);
    CHECK(b.unit == a.unit);
    CHECK(b.name == a.name);
  }
  for (const auto& g : lie_catalog()) {
    LieAlgebraSC h = io::to_lie(io::parse_text(io::dump(io::from_lie(g))));
    CHECK(h.c == g.c);
    CHECK(h.name == g.name);
  }
  CHECK(kind_of([] { io::to_algebra(io::parse_text(R"({"dim": 1, "mult": [[[1]]], "c": 0})")); }) ==
        "unknown-field");
  CHECK(kind_of([] { io::to_algebra(io::parse_text(R"({"dim": 2, "mult": [[[1]]]})")); }) ==
        "dimension-mismatch");
}

TEST_CASE("rationals on the wire") {
  CHECK(io::to_rational(io::parse_text("\"-3/6\"")) == Rational(-1) / 2);
  CHECK(io::to_rational(io::parse_text("7")) == 7);
  CHECK(io::from_rational(Rational(5)) == io::Json(5));
  CHECK(io::from_rational(Rational(1) / 3) == io::Json("1/3"));
  Rational big("123456789012345678901234567890");
  CHECK(io::to_rational(io::from_rational(big)) == big);
  CHECK(kind_of([] { io::to_rational(io::parse_text("1.5")); }) == "invalid-type");
}

TEST_CASE("subspaces, matrices and points") {
  Subspace s{{1, Rational(1) / 2}, {0, 3}};
  CHECK(io::to_subspace(io::from_subspace(s), 2) == s);
  EndoList e{Matrix::identity(2)};
  CHECK(io::to_endos(io::from_endos(e), 2) == e);
  CHECK(io::parse_point("1,-1/2,0", 3) == Vector{1, Rational(-1) / 2, 0});
  CHECK(kind_of([] { io::parse_point("1,0", 3); }) == "dimension-mismatch");
  CHECK(kind_of([] { io::parse_point("1,,0", 3); }) == "parse-error");
}

TEST_CASE("malformed JSON reports line and column") {
  try {
    io::parse_text("{\n  \"n\": 3,\n  \"grade\" 2\n}");
    FAIL("expected parse-error");
  } catch (const Error& e) {
    CHECK(e.kind() == "parse-error");
    CHECK(e.witness() == "3:11");
  }
}
