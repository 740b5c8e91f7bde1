#include "pforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pforge/error.hpp"

namespace pforge {

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars);
  m.exps_[i] = 1;
  return m;
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

namespace {

void compositions(std::size_t nvars, unsigned degree, std::size_t pos,
                  std::vector<unsigned>& cur, std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = degree;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = degree + 1; e-- > 0;) {
    cur[pos] = e;
    compositions(nvars, degree - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> cur(nvars, 0);
  compositions(nvars, degree, 0, cur, out);
  return out;
}

Poly::Poly(std::size_t nvars, const Rational& constant) : n_(nvars) {
  if (!pforge::is_zero(constant)) terms_.emplace(Monomial(nvars), constant);
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) fail("index-out-of-range", "variable index out of range");
  return term(Monomial::variable(nvars, i), Rational(1));
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

std::optional<unsigned> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coeff(Monomial(n_)); }

void Poly::check_same(const Poly& rhs) const {
  if (n_ != rhs.n_)
    fail("dimension-mismatch", "polynomials over " + std::to_string(n_) +
                                   " and " + std::to_string(rhs.n_) + " variables");
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (pforge::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (pforge::is_zero(it->second)) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_same(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_same(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (pforge::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  lhs.check_same(rhs);
  Poly out(lhs.n_);
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::diff(std::size_t i) const {
  if (i >= n_) fail("index-out-of-range", "derivative index " + std::to_string(i) +
                                              " >= " + std::to_string(n_));
  Poly out(n_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    std::vector<unsigned> e = m.exponents();
    Rational k(e[i]);
    --e[i];
    out.add_term(Monomial(std::move(e)), c * k);
  }
  return out;
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (point.size() != n_)
    fail("dimension-mismatch", "evaluation point has " + std::to_string(point.size()) +
                                   " coordinates, expected " + std::to_string(n_));
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
    total += v;
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(i);
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += to_string(mag) + "*" + factors;
    }
  }
  return out;
}

namespace {

/// Recursive-descent reader for the polynomial grammar.
class PolyReader {
 public:
  explicit PolyReader(std::string_view s) : s_(s) {}

  struct Term {
    Rational coeff;
    std::vector<std::pair<std::size_t, unsigned>> factors;
  };

  std::vector<Term> read() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      terms.push_back(read_term(negative));
      first = false;
      skip_ws();
    }
    return terms;
  }

 private:
  Term read_term(bool negative) {
    Term t{Rational(negative ? -1 : 1), {}};
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(read_digits());
      Integer den(1);
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected denominator");
        den = Integer(read_digits());
        if (den == 0) error("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      t.coeff *= q;
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x') error("expected factor after '*'");
      }
    }
    bool have_factor = false;
    while (peek() == 'x') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected variable index");
      std::size_t index = std::stoul(read_digits());
      unsigned exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error("malformed exponent");
        exp = static_cast<unsigned>(std::stoul(read_digits()));
      }
      t.factors.emplace_back(index, exp);
      have_factor = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x') error("expected factor after '*'");
      }
    }
    if (!have_coeff && !have_factor) error("expected term");
    return t;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ - start > 18 && peek() == '^') error("exponent too large");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  [[noreturn]] void error(const std::string& msg) const {
    fail("parse-error", msg + " at offset " + std::to_string(pos_) + " in '" +
                            std::string(s_) + "'",
         ErrorClass::input, std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, std::size_t nvars) {
  Poly out(nvars);
  for (const auto& t : PolyReader(text).read()) {
    std::vector<unsigned> e(nvars, 0);
    for (auto [index, exp] : t.factors) {
      if (index >= nvars)
        fail("index-out-of-range", "variable x" + std::to_string(index) +
                                       " in a ring with " + std::to_string(nvars) +
                                       " variables");
      e[index] += exp;
    }
    out.add_term(Monomial(std::move(e)), t.coeff);
  }
  return out;
}

std::size_t Poly::infer_nvars(std::string_view text) {
  std::size_t n = 0;
  for (const auto& t : PolyReader(text).read())
    for (auto [index, exp] : t.factors) n = std::max(n, index + 1);
  return n;
}

Poly poly_arith(const Poly& lhs, const Poly& rhs, PolyOp op) {
  switch (op) {
    case PolyOp::add: return lhs + rhs;
    case PolyOp::sub: return lhs - rhs;
    case PolyOp::mul: return lhs * rhs;
  }
  return Poly(lhs.nvars());
}

Poly poly_diff(const Poly& p, std::size_t i) { return p.diff(i); }

Rational poly_eval(const Poly& p, std::span<const Rational> point) { return p.eval(point); }

}  // namespace pforge
