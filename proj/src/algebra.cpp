#include "pforge/algebra.hpp"

#include "pforge/error.hpp"

namespace pforge {

AlgebraSC::AlgebraSC(std::size_t d, std::string label)
    : name(std::move(label)), dim(d), mult(d, std::vector<Vector>(d, Vector(d))) {}

Vector AlgebraSC::mul(const Vector& x, const Vector& y) const {
  if (x.size() != dim || y.size() != dim) fail("dimension-mismatch", "algebra element length");
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(mult[i][j][k]) != 0) out[k] += f * mult[i][j][k];
    }
  }
  return out;
}

Matrix AlgebraSC::left(const Vector& x) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(mul(x, basis(j)));
  return Matrix::from_columns(dim, cols);
}

Matrix AlgebraSC::right(const Vector& x) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(mul(basis(j), x));
  return Matrix::from_columns(dim, cols);
}

Vector AlgebraSC::basis(std::size_t i) const {
  Vector v(dim);
  v[i] = 1;
  return v;
}

bool AlgebraSC::is_commutative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (mult[i][j] != mult[j][i]) return false;
  return true;
}

void AlgebraSC::validate() const {
  for (std::size_t i = 0; i < dim; ++i) {
    if (mult[i].size() != dim) fail("dimension-mismatch", "structure constant table shape");
    for (std::size_t j = 0; j < dim; ++j)
      if (mult[i][j].size() != dim) fail("dimension-mismatch", "structure constant table shape");
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (mul(mul(basis(i), basis(j)), basis(k)) != mul(basis(i), mul(basis(j), basis(k))))
          fail("non-associative", "(e_i e_j) e_k != e_i (e_j e_k)", ErrorClass::input,
               std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k));
  if (unit) {
    if (unit->size() != dim) fail("dimension-mismatch", "unit length");
    for (std::size_t i = 0; i < dim; ++i)
      if (mul(*unit, basis(i)) != basis(i) || mul(basis(i), *unit) != basis(i))
        fail("invariant-violation", "declared unit is not a two-sided unit", ErrorClass::input,
             std::to_string(i));
  }
}

Vector flatten(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
  return v;
}

Matrix unflatten(const Vector& v, std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = v[r * dim + c];
  return m;
}

std::vector<Matrix> derivation_basis(const AlgebraSC& a) {
  const std::size_t m = a.dim;
  Matrix sys(m * m * m, m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t row = (i * m + j) * m + k;
        for (std::size_t l = 0; l < m; ++l) sys(row, k * m + l) += a.mult[i][j][l];
        for (std::size_t r = 0; r < m; ++r) {
          sys(row, r * m + i) -= a.mult[r][j][k];
          sys(row, r * m + j) -= a.mult[i][r][k];
        }
      }
  std::vector<Matrix> out;
  for (const auto& v : kernel(sys)) out.push_back(unflatten(v, m));
  return out;
}

AlgebraSC truncated_polynomial_algebra(const std::vector<unsigned>& exponents, std::string name) {
  std::vector<std::vector<unsigned>> mons{{}};
  for (unsigned e : exponents) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& m : mons)
      for (unsigned a = 0; a < e; ++a) {
        auto t = m;
        t.push_back(a);
        next.push_back(std::move(t));
      }
    mons = std::move(next);
  }
  AlgebraSC alg(mons.size(), std::move(name));
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) {
      std::vector<unsigned> prod(exponents.size());
      bool zero = false;
      for (std::size_t v = 0; v < exponents.size(); ++v) {
        prod[v] = mons[i][v] + mons[j][v];
        if (prod[v] >= exponents[v]) zero = true;
      }
      if (zero) continue;
      for (std::size_t k = 0; k < mons.size(); ++k)
        if (mons[k] == prod) alg.mult[i][j][k] = 1;
    }
  alg.unit = alg.basis(0);
  return alg;
}

AlgebraSC product_of_fields(std::size_t k) {
  AlgebraSC alg(k, k == 1 ? "Q" : "Q^" + std::to_string(k));
  Vector unit(k);
  for (std::size_t i = 0; i < k; ++i) {
    alg.mult[i][i][i] = 1;
    unit[i] = 1;
  }
  alg.unit = unit;
  return alg;
}

AlgebraSC matrix_algebra(std::size_t k) {
  AlgebraSC alg(k * k, "M" + std::to_string(k));
  Vector unit(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    unit[i * k + i] = 1;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) alg.mult[i * k + j][j * k + l][i * k + l] = 1;
  }
  alg.unit = unit;
  return alg;
}

}  // namespace pforge
