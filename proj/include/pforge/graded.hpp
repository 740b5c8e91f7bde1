#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pforge/error.hpp"
#include "pforge/poly.hpp"

namespace pforge {

/// Strictly increasing list of coordinate indices naming a basis wedge
/// (d_{i1} ^ ... ^ d_{ik} or dx_{i1} ^ ... ^ dx_{ik}). Empty means grade 0.
using IndexTuple = std::vector<std::size_t>;

/// Sorts an arbitrary index list. Returns the permutation sign, or 0 when an
/// index repeats (the wedge vanishes).
int sort_with_sign(IndexTuple& idx);

/// Sign and union for the wedge of two increasing tuples; sign 0 if they overlap.
std::pair<int, IndexTuple> merge_tuples(const IndexTuple& a, const IndexTuple& b);

/// All increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t k);

/// `a` with the entry at position `pos` removed.
IndexTuple erase_at(const IndexTuple& a, std::size_t pos);

enum class Variance { contravariant, covariant };

/// Sparse antisymmetric field of fixed grade with polynomial coefficients.
///
/// Contravariant fields are multivectors (basis d_I), covariant fields are
/// differential forms (basis dx_I). Terms with zero coefficient are never
/// stored; grades above n are representable but always empty.
template <Variance V>
class GradedField {
 public:
  using Terms = std::map<IndexTuple, Poly>;

  GradedField() = default;
  GradedField(std::size_t nvars, std::size_t grade) : n_(nvars), grade_(grade) {}

  static GradedField scalar(const Poly& f) {
    GradedField g(f.nvars(), 0);
    g.add_term({}, f);
    return g;
  }

  /// coeff * basis(idx); idx may be unsorted, its sign is folded into coeff.
  static GradedField basis(std::size_t nvars, IndexTuple idx, const Poly& coeff) {
    GradedField g(nvars, idx.size());
    g.add_unsorted(std::move(idx), coeff);
    return g;
  }

  std::size_t nvars() const { return n_; }
  std::size_t grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly coeff(const IndexTuple& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Poly(n_) : it->second;
  }

  /// The coefficient of a grade-0 field.
  Poly as_poly() const {
    if (grade_ != 0) fail("grade-mismatch", "expected a grade-0 field");
    return coeff({});
  }

  void add_term(const IndexTuple& idx, const Poly& c) {
    if (c.is_zero()) return;
    if (idx.size() != grade_) fail("grade-mismatch", "term grade does not match field grade");
    if (c.nvars() != n_) fail("dimension-mismatch", "coefficient ring mismatch");
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] >= n_ || (k > 0 && idx[k - 1] >= idx[k]))
        fail("invariant-violation", "index tuple must be strictly increasing and < n");
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Adds sign(idx) * c under the sorted tuple; repeated indices contribute nothing.
  void add_unsorted(IndexTuple idx, const Poly& c) {
    int s = sort_with_sign(idx);
    if (s == 0 || c.is_zero()) return;
    add_term(idx, s > 0 ? c : -c);
  }

  GradedField& operator+=(const GradedField& rhs) {
    check_same(rhs);
    for (const auto& [idx, c] : rhs.terms_) add_term(idx, c);
    return *this;
  }
  GradedField& operator-=(const GradedField& rhs) {
    check_same(rhs);
    for (const auto& [idx, c] : rhs.terms_) add_term(idx, -c);
    return *this;
  }
  friend GradedField operator+(GradedField a, const GradedField& b) { return a += b; }
  friend GradedField operator-(GradedField a, const GradedField& b) { return a -= b; }
  GradedField operator-() const {
    GradedField r(*this);
    for (auto& [idx, c] : r.terms_) c = -c;
    return r;
  }
  friend GradedField operator*(const Poly& f, const GradedField& g) {
    GradedField r(g.n_, g.grade_);
    for (const auto& [idx, c] : g.terms_) r.add_term(idx, f * c);
    return r;
  }
  friend GradedField operator*(const Rational& q, GradedField g) {
    if (sgn(q) == 0) return GradedField(g.n_, g.grade_);
    for (auto& [idx, c] : g.terms_) c *= q;
    return g;
  }

  friend bool operator==(const GradedField& a, const GradedField& b) {
    return a.n_ == b.n_ && a.grade_ == b.grade_ && a.terms_ == b.terms_;
  }

  /// Largest coefficient degree, or -1 when zero.
  int max_coeff_degree() const {
    int d = -1;
    for (const auto& [idx, c] : terms_) d = std::max(d, static_cast<int>(*c.degree()));
    return d;
  }

  void check_same(const GradedField& rhs) const {
    if (n_ != rhs.n_)
      fail("dimension-mismatch", "fields over " + std::to_string(n_) + " and " +
                                     std::to_string(rhs.n_) + " variables");
    if (grade_ != rhs.grade_)
      fail("grade-mismatch", "fields of grade " + std::to_string(grade_) + " and " +
                                 std::to_string(rhs.grade_));
  }

 private:
  std::size_t n_ = 0;
  std::size_t grade_ = 0;
  Terms terms_;
};

using Multivector = GradedField<Variance::contravariant>;
using Form = GradedField<Variance::covariant>;

/// Exterior product. On basis tuples this is the signed merge; graded
/// commutative: a ^ b = (-1)^{|a||b|} b ^ a.
template <Variance V>
GradedField<V> wedge(const GradedField<V>& a, const GradedField<V>& b) {
  if (a.nvars() != b.nvars()) fail("dimension-mismatch", "wedge of fields over different rings");
  GradedField<V> out(a.nvars(), a.grade() + b.grade());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      auto [s, idx] = merge_tuples(ia, ib);
      if (s == 0) continue;
      Poly c = ca * cb;
      out.add_term(idx, s > 0 ? c : -c);
    }
  return out;
}

}  // namespace pforge
