#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pforge/rational.hpp"

namespace pforge {

/// Exponent vector x0^e0 * x1^e1 * ... over a fixed number of variables.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars = 0) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const;
  const std::vector<unsigned>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

/// Graded-lexicographic order: total degree first, then lexicographic with
/// x0 > x1 > ... .
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials in `nvars` variables of total degree exactly `degree`,
/// in descending graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: no zero coefficients are stored and every monomial has
/// exactly nvars() exponents, so structural equality is semantic equality.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  explicit Poly(std::size_t nvars = 0) : n_(nvars) {}
  Poly(std::size_t nvars, const Rational& constant);

  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; std::nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  /// True when every term has the same total degree (zero counts as homogeneous).
  bool is_homogeneous() const;
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  /// Adds c*m in place.
  void add_term(const Monomial& m, const Rational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Formal partial derivative with respect to x_i.
  Poly diff(std::size_t i) const;
  Rational eval(std::span<const Rational> point) const;

  /// Text form in the grammar accepted by parse(), e.g. "3/2*x0^2*x1 - x2".
  std::string str() const;

  /// Parses the polynomial text grammar. Variables must satisfy index < nvars.
  static Poly parse(std::string_view text, std::size_t nvars);
  /// Number of variables implied by the text (max index + 1).
  static std::size_t infer_nvars(std::string_view text);

 private:
  void check_same(const Poly& rhs) const;

  std::size_t n_;
  Terms terms_;
};

enum class PolyOp { add, sub, mul };

/// Binary ring operation; throws Error("dimension-mismatch") when the variable
/// counts differ.
Poly poly_arith(const Poly& lhs, const Poly& rhs, PolyOp op);
/// Throws Error("index-out-of-range") unless i < p.nvars().
Poly poly_diff(const Poly& p, std::size_t i);
/// Throws Error("dimension-mismatch") unless the point has p.nvars() entries.
Rational poly_eval(const Poly& p, std::span<const Rational> point);

}  // namespace pforge
