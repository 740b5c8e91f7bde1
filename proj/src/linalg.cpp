#include "pforge/linalg.hpp"

#include <omp.h>

#include <algorithm>

#include "pforge/error.hpp"

namespace pforge {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) fail("dimension-mismatch", "matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) fail("dimension-mismatch", "matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail("dimension-mismatch", "matrix sum shape");
  Matrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail("dimension-mismatch", "matrix sum shape");
  Matrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
  return out;
}

Matrix Matrix::operator*(const Rational& c) const {
  Matrix out(*this);
  for (auto& x : out.data_) x *= c;
  return out;
}

Echelon rref(Matrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

namespace {

/// Scales each row by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return rows;
}

/// Bareiss step applied to row i against pivot row r at column c.
inline void bareiss_row(std::vector<Integer>& row, const std::vector<Integer>& pivot_row,
                        std::size_t c, const Integer& prev) {
  const Integer& piv = pivot_row[c];
  Integer lead = row[c];
  if (lead == 0) {
    for (std::size_t j = c + 1; j < row.size(); ++j) {
      row[j] *= piv;
      mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
    }
    return;
  }
  for (std::size_t j = c + 1; j < row.size(); ++j) {
    row[j] = piv * row[j] - lead * pivot_row[j];
    mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
  }
  row[c] = 0;
}

std::size_t bareiss_rank(const Matrix& m, bool parallel) {
  auto rows = integer_rows(m);
  const std::size_t nr = m.rows(), nc = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && rows[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(rows[p], rows[r]);
    const auto& pivot_row = rows[r];
    const long first = static_cast<long>(r + 1), last = static_cast<long>(nr);
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (long i = first; i < last; ++i) bareiss_row(rows[i], pivot_row, c, prev);
    } else {
      for (long i = first; i < last; ++i) bareiss_row(rows[i], pivot_row, c, prev);
    }
    prev = rows[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank_serial(const Matrix& m) { return bareiss_rank(m, false); }

std::size_t rank_parallel(const Matrix& m) {
  // Inside an enclosing parallel region the row loop runs on the calling thread.
  return bareiss_rank(m, !omp_in_parallel() && m.rows() * m.cols() >= 4096);
}

std::vector<Vector> kernel(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) fail("dimension-mismatch", "right-hand side length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    x[e.pivots[k]] = e.reduced(k, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail("dimension-mismatch", "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail("dimension-mismatch", "determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  Echelon e = rref(Matrix::from_rows(dim, vectors));
  std::vector<Vector> out;
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.push_back(e.reduced.row(k));
  return out;
}

std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(dim, vectors));
}

bool in_span(const std::vector<Vector>& basis, const Vector& v, std::size_t dim) {
  if (is_zero(v)) return true;
  std::vector<Vector> ext = basis;
  ext.push_back(v);
  return span_rank(ext, dim) == span_rank(basis, dim);
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v,
                                  std::size_t dim) {
  return solve(Matrix::from_columns(dim, basis), v);
}

std::vector<Vector> complement_basis(const std::vector<Vector>& basis, std::size_t dim) {
  std::vector<Vector> current = span_basis(basis, dim);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector e(dim);
    e[i] = 1;
    if (!in_span(current, e, dim)) {
      current.push_back(e);
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<Vector> intersect(const std::vector<Vector>& a, const std::vector<Vector>& b,
                              std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  // Solve sum x_i a_i - sum y_j b_j = 0; the a-parts span the intersection.
  std::vector<Vector> cols = a;
  for (const auto& v : b) {
    Vector neg(v);
    for (auto& x : neg) x = -x;
    cols.push_back(std::move(neg));
  }
  std::vector<Vector> out;
  for (const auto& k : kernel(Matrix::from_columns(dim, cols))) {
    Vector w(dim);
    for (std::size_t i = 0; i < a.size(); ++i) w = axpy(k[i], a[i], std::move(w));
    out.push_back(std::move(w));
  }
  return span_basis(out, dim);
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Vector axpy(const Rational& a, const Vector& x, Vector y) {
  if (sgn(a) == 0) return y;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  return y;
}

}  // namespace pforge
