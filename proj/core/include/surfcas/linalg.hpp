#pragma once

#include <cstddef>
#include <vector>

#include "surfcas/field.hpp"

namespace surfcas {

using Vec = std::vector<Coeff>;

/// v += c * w over F (same length).
void axpy(const PrimeField& F, Vec& v, Coeff c, const Vec& w);

/// Row-major dense matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Coeff* row(std::size_t r) { return data_.data() + r * cols_; }
  const Coeff* row(std::size_t r) const { return data_.data() + r * cols_; }
  Vec row_vec(std::size_t r) const { return Vec(row(r), row(r) + cols_); }
  void set_row(std::size_t r, const Vec& v);
  Matrix transposed() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Coeff> data_;
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(const PrimeField& F, Matrix& A);
std::size_t rank(const PrimeField& F, Matrix A);
/// Basis of {x : A x = 0}.
std::vector<Vec> kernel(const PrimeField& F, Matrix A);
/// Basis of {y : y^T A = 0}.
std::vector<Vec> left_kernel(const PrimeField& F, const Matrix& A);
Matrix multiply(const PrimeField& F, const Matrix& A, const Matrix& B);

/// Incrementally grown subspace of F^n kept in semi-echelon form.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& F, std::size_t dim) : F_(F), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Reduces v in place; afterwards v is zero iff it was in the span.
  void reduce(Vec& v) const;
  /// Adds v if independent; returns whether it was.
  bool insert(Vec v);
  bool contains(Vec v) const;
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates of the complement: columns not used as pivots.
  std::vector<std::size_t> free_columns() const;

 private:
  PrimeField F_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace surfcas
