// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgrank/scalar.hpp"

namespace lgrank {

// Dense matrix over an exact field type T. T must provide +, -, *, unary -,
// == and the free functions is_zero(T), inverse(T), prefers_fraction_free(T).
// Every matrix keeps a zero prototype so that entries remember their context
// (a field pointer, a modulus) even when the matrix is empty.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  void set_row(std::size_t i, const std::vector<T>& v) {
    require(v.size() == cols_, "row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void append_row(const std::vector<T>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    require(v.size() == cols_, "row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& zero,
                          std::size_t cols_if_empty = 0) {
    Matrix m(0, rows.empty() ? cols_if_empty : rows.front().size(), zero);
    for (const auto& r : rows) m.append_row(r);
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix_cols(const std::vector<std::size_t>& cols) const {
    Matrix s(rows_, cols.size(), zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(i, cols[j]);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (is_zero(b(k, j))) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    require(v.size() == cols_, "matrix-vector shape mismatch");
    std::vector<T> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero(v[j]) && !is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  static void require(bool ok, const char* msg) {
    if (!ok) throw DomainError(msg);
  }
  std::size_t rows_{0};
  std::size_t cols_{0};
  T zero_{};
  std::vector<T> data_;
};

template <class T>
struct Echelon {
  Matrix<T> reduced;                 // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each kept row
  std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan with the first nonzero entry (in row order) of each column as
// pivot; pivot rows are normalised to one.
template <class T>
Echelon<T> rref(Matrix<T> m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && is_zero(m(p, c))) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
    T inv = inverse(m(r, c));
    for (std::size_t j = c; j < C; ++j)
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<T> reduced(r, C, m.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < C; ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

// Fraction-free elimination. Returns the rank; when the matrix is square,
// *det receives the determinant.
template <class T>
std::size_t bareiss(Matrix<T> m, T* det = nullptr) {
  const std::size_t R = m.rows(), C = m.cols();
  T prev = one_like(m.zero());
  bool negate = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && is_zero(m(p, c))) ++p;
    if (p == R) continue;
    if (p != r) {
      for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
      negate = !negate;
    }
    T pinv = inverse(prev);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        T v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        m(i, j) = is_zero(v) ? m.zero() : v * pinv;
      }
      m(i, c) = m.zero();
    }
    prev = m(r, c);
    ++r;
  }
  if (det != nullptr) {
    if (R != C) throw DomainError("determinant of a non-square matrix");
    if (r < R) {
      *det = m.zero();
    } else {
      *det = negate ? -prev : prev;
    }
  }
  return r;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (prefers_fraction_free(m.zero())) return bareiss(m);
  return rref(m).rank();
}

template <class T>
T det(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return one_like(m.zero());
  if (prefers_fraction_free(m.zero())) {
    T d = m.zero();
    bareiss(m, &d);
    return d;
  }
  // plain elimination
  Matrix<T> a = m;
  const std::size_t n = a.rows();
  T d = one_like(a.zero());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return a.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d = d * a(c, c);
    T inv = inverse(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      T f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!is_zero(a(c, j))) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

// Basis of {x : m x = 0}, one vector per row, not normalised. Over fields
// of characteristic zero this runs fraction-free Gauss-Jordan, so entries stay
// minors of m instead of ratios of minors.
template <class T>
Matrix<T> kernel_basis(const Matrix<T>& in) {
  const std::size_t C = in.cols();
  Matrix<T> basis(0, C, in.zero());
  if (!prefers_fraction_free(in.zero())) {
    Echelon<T> e = rref(in);
    std::vector<bool> is_pivot(C, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    const T one = one_like(in.zero());
    for (std::size_t f = 0; f < C; ++f) {
      if (is_pivot[f]) continue;
      std::vector<T> v(C, in.zero());
      v[f] = one;
      for (std::size_t i = 0; i < e.pivots.size(); ++i)
        if (!is_zero(e.reduced(i, f))) v[e.pivots[i]] = -e.reduced(i, f);
      basis.append_row(v);
    }
    return basis;
  }
  Matrix<T> m = in;
  const std::size_t R = m.rows();
  T prev = one_like(m.zero());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && is_zero(m(p, c))) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
    T pinv = inverse(prev);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < C; ++j) {
        if (j == c) continue;
        T v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        m(i, j) = is_zero(v) ? m.zero() : v * pinv;
      }
      m(i, c) = m.zero();
    }
    prev = m(r, c);
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(C, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(C, m.zero());
    v[f] = prev;  // every pivot equals the last one
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!is_zero(m(i, f))) v[pivots[i]] = -m(i, f);
    basis.append_row(v);
  }
  return basis;
}

// Basis of {x : m x = 0}, one vector per row, in reduced echelon form.
template <class T>
Matrix<T> kernel(const Matrix<T>& m) {
  Matrix<T> basis = kernel_basis(m);
  if (basis.rows() == 0) return basis;
  return rref(basis).reduced;
}

template <class T>
Matrix<T> left_kernel(const Matrix<T>& m) {
  return kernel(m.transpose());
}

// One solution of m x = b, or nothing when the system is inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  if (b.size() != m.rows()) throw DomainError("solve: right-hand side length mismatch");
  const std::size_t C = m.cols();
  Matrix<T> aug(m.rows(), C + 1, m.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
    aug(i, C) = b[i];
  }
  Echelon<T> e = rref(std::move(aug));
  std::vector<T> x(C, m.zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == C) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, C);
  }
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("inverse of a non-square matrix");
  const T one = one_like(m.zero());
  Matrix<T> aug(n, 2 * n, m.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one;
  }
  Echelon<T> e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw SingularMatrixError("matrix is singular");
  Matrix<T> inv(n, n, m.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

}  // namespace lgrank
