#pragma once

#include <optional>

#include "pforge/form.hpp"
#include "pforge/linalg.hpp"

namespace pforge {

enum class Complex { lichnerowicz, canonical };

/// (index tuple, coefficient monomial) pairs of one weight block, tuples
/// outermost, both in canonical order.
using BlockBasis = std::vector<std::pair<IndexTuple, Monomial>>;

/// Weight of a multivector term is coeff degree - grade; of a form term
/// coeff degree + grade. A homogeneous p of degree d shifts weight by d - 2
/// under either differential.
struct WeightBlock {
  Complex complex = Complex::lichnerowicz;
  std::size_t grade = 0;
  long weight = 0;
  std::size_t target_grade = 0;
  long target_weight = 0;
  BlockBasis basis;
  BlockBasis target_basis;
  Matrix matrix;  // target_basis.size() x basis.size()
};

/// Common degree of all coefficients of p; nullopt for p = 0.
/// Fails with non-homogeneous otherwise.
std::optional<unsigned> structure_degree(const Multivector& p);

/// Weight shift of the differentials (0 for p = 0).
long weight_shift(const Multivector& p);

BlockBasis block_basis(std::size_t n, Complex complex, std::size_t grade, long weight);

/// Matrix of d_P (raising grade) or delta (lowering grade) on block (k, w).
/// Checks homogeneity and [p,p] = 0 unless `checked` is already known.
WeightBlock block_matrix(const Multivector& p, Complex complex, std::size_t grade, long weight,
                         bool checked = false);

struct HomologyRow {
  std::size_t grade = 0;
  long weight = 0;
  std::size_t dim_c = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  std::size_t dim_h = 0;
};

struct HomologyOptions {
  std::size_t max_grade = 2;
  long min_weight = 0;
  long max_weight = 4;
  bool parallel = true;
};

/// Rows ordered by (grade, weight).
std::vector<HomologyRow> poisson_cohomology_dims(const Multivector& p, const HomologyOptions& opt);
std::vector<HomologyRow> canonical_homology_dims(const Multivector& p, const HomologyOptions& opt);

/// First basis form f dx_I (grade <= max_grade, coeff degree <= max_degree)
/// with sharp(d a) != [p, sharp(a)], or nullopt.
std::optional<Form> chain_map_counterexample(const Multivector& p, std::size_t max_grade,
                                             unsigned max_degree);

}  // namespace pforge
