#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pforge/rational.hpp"

namespace pforge {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Rational& c) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);

/// Reference rank: fraction-free (Bareiss) elimination, one thread.
std::size_t rank_serial(const Matrix& m);
/// Same elimination with the row updates of each pivot step spread over
/// OpenMP threads. Results are identical to rank_serial.
std::size_t rank_parallel(const Matrix& m);
/// Rank used throughout the library (the OpenMP kernel).
inline std::size_t rank(const Matrix& m) { return rank_parallel(m); }

/// Basis of the null space {x : m x = 0}, one vector per free column,
/// normalized so the free coordinate is 1 (deterministic).
std::vector<Vector> kernel(const Matrix& m);
/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(const Matrix& m);

/// Linearly independent subset spanning the same space (echelon rows).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);
/// Number of independent vectors in the list.
std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim);
bool in_span(const std::vector<Vector>& basis, const Vector& v, std::size_t dim);
/// Coordinates of v in the given (independent) basis, or nullopt.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v,
                                  std::size_t dim);
/// Standard basis vectors completing `basis` to a basis of Q^dim.
std::vector<Vector> complement_basis(const std::vector<Vector>& basis, std::size_t dim);
/// Basis of the intersection of two subspaces of Q^dim.
std::vector<Vector> intersect(const std::vector<Vector>& a, const std::vector<Vector>& b,
                              std::size_t dim);

bool is_zero(const Vector& v);
Vector axpy(const Rational& a, const Vector& x, Vector y);

}  // namespace pforge
