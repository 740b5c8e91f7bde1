#include "pforge/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "pforge/error.hpp"

namespace pforge::io {

namespace {

std::size_t to_index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail("invalid-type", where + " must be a non-negative integer");
  return j.get<std::size_t>();
}

const Json& array_of(const Json& j, std::size_t len, const std::string& where) {
  if (!j.is_array()) fail("invalid-type", where + " must be an array");
  if (len != static_cast<std::size_t>(-1) && j.size() != len)
    fail("dimension-mismatch", where + " must have " + std::to_string(len) + " entries, got " +
                                   std::to_string(j.size()),
         ErrorClass::input, std::to_string(j.size()));
  return j;
}

constexpr std::size_t any_len = static_cast<std::size_t>(-1);

template <Variance V>
GradedField<V> to_field(const Json& j, bool form) {
  const std::string what = form ? "form" : "multivector";
  if (!j.is_object()) fail("invalid-type", what + " must be an object");
  expect_keys(j, {"kind", "n", "grade", "terms"}, {"n", "grade", "terms"}, what);
  if (j.contains("kind")) {
    if (!j["kind"].is_string() || j["kind"].get<std::string>() != what)
      fail("invalid-type", "expected kind \"" + what + "\"");
  } else if (form) {
    fail("missing-field", "form requires \"kind\": \"form\"");
  }
  std::size_t n = to_index(j["n"], "n");
  std::size_t grade = to_index(j["grade"], "grade");
  GradedField<V> out(n, grade);
  for (const auto& t : array_of(j["terms"], any_len, "terms")) {
    if (!t.is_object()) fail("invalid-type", "term must be an object");
    expect_keys(t, {"idx", "coeff"}, {"idx", "coeff"}, "term");
    IndexTuple idx;
    for (const auto& i : array_of(t["idx"], grade, "idx")) {
      std::size_t k = to_index(i, "idx entry");
      if (k >= n) fail("invariant-violation", "index " + std::to_string(k) + " out of range for n=" +
                                                  std::to_string(n));
      idx.push_back(k);
    }
    out.add_unsorted(std::move(idx), to_poly(t["coeff"], n));
  }
  return out;
}

template <Variance V>
Json from_field(const GradedField<V>& f, bool form) {
  Json terms = Json::array();
  for (const auto& [idx, c] : f.terms()) terms.push_back({{"idx", idx}, {"coeff", c.str()}});
  Json j = {{"n", f.nvars()}, {"grade", f.grade()}, {"terms", terms}};
  if (form) j["kind"] = "form";
  return j;
}

std::vector<std::vector<Vector>> to_table(const Json& j, std::size_t dim, const std::string& where) {
  std::vector<std::vector<Vector>> t;
  for (const auto& row : array_of(j, dim, where)) {
    t.emplace_back();
    for (const auto& v : array_of(row, dim, where + " row")) t.back().push_back(to_vector(v, dim));
  }
  return t;
}

Json from_table(const std::vector<std::vector<Vector>>& t) {
  Json out = Json::array();
  for (const auto& row : t) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(from_vector(v));
    out.push_back(r);
  }
  return out;
}

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("parse-error", "malformed JSON at line " + std::to_string(line) + ", column " +
                            std::to_string(col),
         ErrorClass::input, std::to_string(line) + ":" + std::to_string(col));
  }
}

Json read_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("io-error", "cannot read '" + path + "'", ErrorClass::input, path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_text(text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void expect_keys(const Json& j, const std::vector<std::string>& allowed,
                 const std::vector<std::string>& required, const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      fail("unknown-field", "unknown field \"" + key + "\" in " + where, ErrorClass::input, key);
  for (const auto& key : required)
    if (!j.contains(key))
      fail("missing-field", "missing field \"" + key + "\" in " + where, ErrorClass::input, key);
}

Rational to_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<unsigned long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("invalid-type", "rational must be an integer or a string such as \"-3/4\"");
}

Json from_rational(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Vector to_vector(const Json& j, std::size_t dim) {
  Vector v;
  for (const auto& x : array_of(j, dim, "vector")) v.push_back(to_rational(x));
  return v;
}

Json from_vector(const Vector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(from_rational(q));
  return out;
}

Matrix to_matrix(const Json& j, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  std::size_t i = 0;
  for (const auto& row : array_of(j, rows, "matrix")) {
    Vector v = to_vector(row, cols);
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = v[c];
    ++i;
  }
  return m;
}

Json from_matrix(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(i, c);
    out.push_back(from_vector(row));
  }
  return out;
}

Poly to_poly(const Json& j, std::size_t nvars) {
  if (j.is_string()) return Poly::parse(j.get<std::string>(), nvars);
  if (j.is_number_integer() || j.is_number_unsigned()) return Poly(nvars, to_rational(j));
  fail("invalid-type", "polynomial must be a string in the polynomial grammar");
}

std::vector<Poly> to_polys(const Json& j, std::size_t nvars) {
  std::vector<Poly> out;
  for (const auto& x : array_of(j, any_len, "polynomial list")) out.push_back(to_poly(x, nvars));
  return out;
}

Json from_polys(const std::vector<Poly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

Multivector to_multivector(const Json& j) {
  return to_field<Variance::contravariant>(j, false);
}
Json from_multivector(const Multivector& u) { return from_field(u, false); }
Form to_form(const Json& j) { return to_field<Variance::covariant>(j, true); }
Json from_form(const Form& a) { return from_field(a, true); }

AlgebraSC to_algebra(const Json& j) {
  if (!j.is_object()) fail("invalid-type", "algebra must be an object");
  expect_keys(j, {"name", "dim", "mult", "unit"}, {"dim", "mult"}, "algebra");
  std::size_t dim = to_index(j["dim"], "dim");
  AlgebraSC a(dim, j.contains("name") ? j["name"].get<std::string>() : std::string{});
  a.mult = to_table(j["mult"], dim, "mult");
  if (j.contains("unit")) a.unit = to_vector(j["unit"], dim);
  return a;
}

Json from_algebra(const AlgebraSC& a) {
  Json j = {{"dim", a.dim}, {"mult", from_table(a.mult)}};
  if (!a.name.empty()) j["name"] = a.name;
  if (a.unit) j["unit"] = from_vector(*a.unit);
  return j;
}

LieAlgebraSC to_lie(const Json& j) {
  if (!j.is_object()) fail("invalid-type", "Lie algebra must be an object");
  expect_keys(j, {"name", "dim", "c"}, {"dim", "c"}, "Lie algebra");
  std::size_t dim = to_index(j["dim"], "dim");
  LieAlgebraSC g(dim, j.contains("name") ? j["name"].get<std::string>() : std::string{});
  g.c = to_table(j["c"], dim, "c");
  return g;
}

Json from_lie(const LieAlgebraSC& g) {
  Json j = {{"dim", g.dim}, {"c", from_table(g.c)}};
  if (!g.name.empty()) j["name"] = g.name;
  return j;
}

Subspace to_subspace(const Json& j, std::size_t dim) {
  Subspace s;
  for (const auto& row : array_of(j, any_len, "subspace")) s.push_back(to_vector(row, dim));
  return s;
}

Json from_subspace(const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(from_vector(v));
  return out;
}

EndoList to_endos(const Json& j, std::size_t dim) {
  EndoList out;
  for (const auto& m : array_of(j, any_len, "matrix list")) out.push_back(to_matrix(m, dim, dim));
  return out;
}

Json from_endos(const EndoList& e) {
  Json out = Json::array();
  for (const auto& m : e) out.push_back(from_matrix(m));
  return out;
}

Vector parse_point(std::string_view text, std::size_t dim) {
  Vector v;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    v.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  if (v.size() != dim)
    fail("dimension-mismatch", "point has " + std::to_string(v.size()) + " coordinates, expected " +
                                   std::to_string(dim),
         ErrorClass::input, std::to_string(v.size()));
  return v;
}

}  // namespace pforge::io
