#include "surfcas/linalg.hpp"

#include <stdexcept>

namespace surfcas {

void axpy(const PrimeField& F, Vec& v, Coeff c, const Vec& w) {
  if (c == 0) return;
  const std::size_t n = v.size();
  Coeff* a = v.data();
  const Coeff* b = w.data();
  for (std::size_t i = 0; i < n; ++i)
    if (b[i]) a[i] = F.fma(a[i], c, b[i]);
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  std::copy(v.begin(), v.end(), row(r));
}

Matrix Matrix::transposed() const {
  Matrix T(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) T.at(c, r) = at(r, c);
  return T;
}

std::vector<std::size_t> row_reduce(const PrimeField& F, Matrix& A) {
  std::vector<std::size_t> pivots;
  const std::size_t m = A.rows(), n = A.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && A.at(piv, c) == 0) ++piv;
    if (piv == m) continue;
    if (piv != r)
      for (std::size_t k = 0; k < n; ++k) std::swap(A.at(piv, k), A.at(r, k));
    Coeff inv = F.inv(A.at(r, c));
    Coeff* pr = A.row(r);
    for (std::size_t k = c; k < n; ++k) pr[k] = F.mul(pr[k], inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      Coeff f = A.at(i, c);
      if (!f) continue;
      Coeff nf = F.neg(f);
      Coeff* pi = A.row(i);
      for (std::size_t k = c; k < n; ++k)
        if (pr[k]) pi[k] = F.fma(pi[k], nf, pr[k]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const PrimeField& F, Matrix A) {
  // Forward elimination only.
  const std::size_t m = A.rows(), n = A.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && A.at(piv, c) == 0) ++piv;
    if (piv == m) continue;
    if (piv != r)
      for (std::size_t k = c; k < n; ++k) std::swap(A.at(piv, k), A.at(r, k));
    Coeff inv = F.inv(A.at(r, c));
    Coeff* pr = A.row(r);
    for (std::size_t k = c; k < n; ++k) pr[k] = F.mul(pr[k], inv);
    for (std::size_t i = r + 1; i < m; ++i) {
      Coeff f = A.at(i, c);
      if (!f) continue;
      Coeff nf = F.neg(f);
      Coeff* pi = A.row(i);
      for (std::size_t k = c; k < n; ++k)
        if (pr[k]) pi[k] = F.fma(pi[k], nf, pr[k]);
    }
    ++r;
  }
  return r;
}

std::vector<Vec> kernel(const PrimeField& F, Matrix A) {
  auto pivots = row_reduce(F, A);
  const std::size_t n = A.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(A.at(r, f));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> left_kernel(const PrimeField& F, const Matrix& A) { return kernel(F, A.transposed()); }

Matrix multiply(const PrimeField& F, const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      Coeff a = A.at(i, k);
      if (!a) continue;
      const Coeff* br = B.row(k);
      Coeff* cr = C.row(i);
      for (std::size_t j = 0; j < B.cols(); ++j)
        if (br[j]) cr[j] = F.fma(cr[j], a, br[j]);
    }
  return C;
}

void EchelonBasis::reduce(Vec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Coeff c = v[pivots_[i]];
    if (c) axpy(F_, v, F_.neg(c), rows_[i]);
  }
}

bool EchelonBasis::insert(Vec v) {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  Coeff inv = F_.inv(v[p]);
  for (auto& x : v) x = F_.mul(x, inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::contains(Vec v) const {
  reduce(v);
  for (Coeff c : v)
    if (c) return false;
  return true;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<char> used(dim_, 0);
  for (auto p : pivots_) used[p] = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!used[i]) out.push_back(i);
  return out;
}

}  // namespace surfcas
