#include "pforge/homology.hpp"

#include <exception>
#include <map>

namespace pforge {

std::optional<unsigned> structure_degree(const Multivector& p) {
  std::optional<unsigned> d;
  for (const auto& [idx, c] : p.terms()) {
    if (!c.is_homogeneous())
      fail("non-homogeneous", "coefficient " + c.str() + " is not homogeneous",
           ErrorClass::precondition, c.str());
    unsigned e = *c.degree();
    if (d && *d != e)
      fail("non-homogeneous", "coefficients of different degrees", ErrorClass::precondition,
           c.str());
    d = e;
  }
  return d;
}

long weight_shift(const Multivector& p) {
  auto d = structure_degree(p);
  return d ? static_cast<long>(*d) - 2 : 0;
}

BlockBasis block_basis(std::size_t n, Complex complex, std::size_t grade, long weight) {
  BlockBasis out;
  if (grade > n) return out;
  long deg = complex == Complex::lichnerowicz ? weight + static_cast<long>(grade)
                                              : weight - static_cast<long>(grade);
  if (deg < 0) return out;
  auto mons = monomials_of_degree(n, static_cast<unsigned>(deg));
  for (const auto& t : index_tuples(n, grade))
    for (const auto& m : mons) out.emplace_back(t, m);
  return out;
}

namespace {

void check_structure(const Multivector& p) {
  if (p.grade() != 2) fail("grade-mismatch", "the Poisson tensor must be a bivector");
  structure_degree(p);
  if (!jacobiator(p).is_zero())
    fail("non-involutive", "[p,p] != 0", ErrorClass::precondition);
}

/// Maps (tuple, monomial) to its column in a block basis.
class BasisIndex {
 public:
  explicit BasisIndex(const BlockBasis& b) {
    for (std::size_t i = 0; i < b.size(); ++i) pos_[b[i].first].emplace(b[i].second, i);
  }
  std::size_t at(const IndexTuple& t, const Monomial& m) const {
    auto it = pos_.find(t);
    if (it != pos_.end()) {
      auto jt = it->second.find(m);
      if (jt != it->second.end()) return jt->second;
    }
    fail("invariant-violation", "differential left its weight block");
  }

 private:
  std::map<IndexTuple, std::map<Monomial, std::size_t, GrlexLess>> pos_;
};

template <class Field>
void fill_column(Matrix& mat, std::size_t col, const Field& image, const BasisIndex& index) {
  for (const auto& [t, c] : image.terms())
    for (const auto& [m, q] : c.terms()) mat(index.at(t, m), col) = q;
}

}  // namespace

WeightBlock block_matrix(const Multivector& p, Complex complex, std::size_t grade, long weight,
                         bool checked) {
  if (!checked) check_structure(p);
  const std::size_t n = p.nvars();
  WeightBlock b;
  b.complex = complex;
  b.grade = grade;
  b.weight = weight;
  b.target_weight = weight + weight_shift(p);
  b.basis = block_basis(n, complex, grade, weight);
  if (complex == Complex::lichnerowicz) {
    b.target_grade = grade + 1;
    b.target_basis = block_basis(n, complex, grade + 1, b.target_weight);
  } else if (grade > 0) {
    b.target_grade = grade - 1;
    b.target_basis = block_basis(n, complex, grade - 1, b.target_weight);
  }
  b.matrix = Matrix(b.target_basis.size(), b.basis.size());
  if (b.basis.empty() || b.target_basis.empty()) return b;
  BasisIndex index(b.target_basis);
  for (std::size_t j = 0; j < b.basis.size(); ++j) {
    const auto& [t, m] = b.basis[j];
    Poly c = Poly::term(m, Rational(1));
    if (complex == Complex::lichnerowicz)
      fill_column(b.matrix, j, lichnerowicz_dP(p, Multivector::basis(n, t, c)), index);
    else
      fill_column(b.matrix, j, delta(p, Form::basis(n, t, c)), index);
  }
  return b;
}

namespace {

struct RankJob {
  std::size_t grade;
  long weight;
  std::size_t dim = 0;
  std::size_t rank = 0;
};

std::vector<HomologyRow> dims(const Multivector& p, Complex complex, const HomologyOptions& opt) {
  check_structure(p);
  const long s = weight_shift(p);
  // Outgoing differential of (k, w) plus the incoming one, which is the
  // outgoing differential of (k -/+ 1, w - s).
  std::map<std::pair<std::size_t, long>, std::size_t> slot;
  std::vector<RankJob> jobs;
  auto want = [&](std::size_t k, long w) {
    if (slot.try_emplace({k, w}, jobs.size()).second) jobs.push_back({k, w});
  };
  for (std::size_t k = 0; k <= opt.max_grade; ++k)
    for (long w = opt.min_weight; w <= opt.max_weight; ++w) {
      want(k, w);
      if (complex == Complex::lichnerowicz && k > 0) want(k - 1, w - s);
      if (complex == Complex::canonical) want(k + 1, w - s);
    }

  auto work = [&](RankJob& j) {
    WeightBlock b = block_matrix(p, complex, j.grade, j.weight, true);
    j.dim = b.basis.size();
    j.rank = opt.parallel ? rank_parallel(b.matrix) : rank_serial(b.matrix);
  };
  if (opt.parallel) {
    std::vector<std::exception_ptr> errors(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      try {
        work(jobs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    for (auto& j : jobs) work(j);
  }

  std::vector<HomologyRow> rows;
  for (std::size_t k = 0; k <= opt.max_grade; ++k)
    for (long w = opt.min_weight; w <= opt.max_weight; ++w) {
      HomologyRow r;
      r.grade = k;
      r.weight = w;
      const RankJob& self = jobs[slot.at({k, w})];
      r.dim_c = self.dim;
      r.rank_out = self.rank;
      if (complex == Complex::lichnerowicz && k > 0) r.rank_in = jobs[slot.at({k - 1, w - s})].rank;
      if (complex == Complex::canonical) r.rank_in = jobs[slot.at({k + 1, w - s})].rank;
      r.dim_h = r.dim_c - r.rank_out - r.rank_in;
      rows.push_back(r);
    }
  return rows;
}

}  // namespace

std::vector<HomologyRow> poisson_cohomology_dims(const Multivector& p, const HomologyOptions& opt) {
  return dims(p, Complex::lichnerowicz, opt);
}

std::vector<HomologyRow> canonical_homology_dims(const Multivector& p, const HomologyOptions& opt) {
  return dims(p, Complex::canonical, opt);
}

std::optional<Form> chain_map_counterexample(const Multivector& p, std::size_t max_grade,
                                             unsigned max_degree) {
  const std::size_t n = p.nvars();
  for (std::size_t k = 0; k <= std::min(max_grade, n); ++k)
    for (const auto& t : index_tuples(n, k))
      for (unsigned d = 0; d <= max_degree; ++d)
        for (const auto& m : monomials_of_degree(n, d)) {
          Form a = Form::basis(n, t, Poly::term(m, Rational(1)));
          if (sharp(p, form_d(a)) != lichnerowicz_dP(p, sharp(p, a))) return a;
        }
  return std::nullopt;
}

}  // namespace pforge
