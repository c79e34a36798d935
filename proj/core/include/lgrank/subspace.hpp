// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "lgrank/extension.hpp"
#include "lgrank/matrix.hpp"

namespace lgrank {

// Subspace of T^n stored as the nonzero rows of its reduced row echelon form,
// so equality of subspaces is equality of the stored matrices.
template <class T>
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const T& zero) : basis_(0, ambient, zero) {}

  static Subspace span(const Matrix<T>& rows) {
    Subspace s(rows.cols(), rows.zero());
    if (rows.rows() == 0) return s;
    Echelon<T> e = rref(rows);
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static Subspace span(const std::vector<std::vector<T>>& vecs, std::size_t ambient, const T& zero) {
    return span(Matrix<T>::from_rows(vecs, zero, ambient));
  }
  static Subspace full(std::size_t n, const T& zero, const T& one) {
    return span(Matrix<T>::identity(n, zero, one));
  }

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const Matrix<T>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<T> vector(std::size_t i) const { return basis_.row(i); }
  const T& zero() const { return basis_.zero(); }

  // v minus its projection along the pivots; zero iff v lies in the subspace
  std::vector<T> reduce(std::vector<T> v) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const T c = v[pivots_[i]];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!is_zero(basis_(i, j))) v[j] -= c * basis_(i, j);
    }
    return v;
  }
  bool contains(const std::vector<T>& v) const {
    if (v.size() != ambient_dim()) throw DomainError("subspace membership: length mismatch");
    for (const auto& x : reduce(v))
      if (!is_zero(x)) return false;
    return true;
  }
  bool contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.vector(i))) return false;
    return true;
  }
  Subspace sum(const Subspace& o) const {
    Matrix<T> m = basis_;
    for (std::size_t i = 0; i < o.dim(); ++i) m.append_row(o.vector(i));
    return span(m);
  }
  Subspace intersect(const Subspace& o) const {
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_dim(), zero());
    Matrix<T> stacked = basis_;
    for (std::size_t i = 0; i < o.dim(); ++i) stacked.append_row(o.vector(i));
    Matrix<T> rel = left_kernel(stacked);
    Matrix<T> out(0, ambient_dim(), zero());
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      std::vector<T> v(ambient_dim(), zero());
      for (std::size_t i = 0; i < dim(); ++i)
        if (!is_zero(rel(r, i)))
          for (std::size_t j = 0; j < ambient_dim(); ++j) v[j] += rel(r, i) * basis_(i, j);
      out.append_row(v);
    }
    return span(out);
  }
  // {y : <x, y> = 0 for all x} for the standard bilinear form
  Subspace orthogonal() const {
    if (dim() == 0) return full(ambient_dim(), zero(), one_like(zero()));
    return span(kernel(basis_));
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis_ == b.basis_;
  }

 private:
  Matrix<T> basis_;
  std::vector<std::size_t> pivots_;
};

// K-subspace of L, in canonical K-coordinates.
template <class S>
using KSubspace = Subspace<FieldElement<S>>;

template <class S>
KSubspace<S> k_span(const Extension<S>& ext, const std::vector<FieldElement<S>>& elems) {
  Matrix<FieldElement<S>> m(0, ext.degree(), ext.K().zero());
  for (const auto& x : elems) m.append_row(ext.coordinates(x));
  return KSubspace<S>::span(m);
}

template <class S>
std::vector<FieldElement<S>> k_elements(const Extension<S>& ext, const KSubspace<S>& s) {
  std::vector<FieldElement<S>> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(ext.from_coordinates(s.vector(i)));
  return out;
}

// Trace-form orthogonal complement {y : Tr(xy) = 0 for all x in s}.
template <class S>
KSubspace<S> orth_complement_trace(const Extension<S>& ext, const KSubspace<S>& s) {
  const std::size_t n = ext.degree();
  if (s.ambient_dim() != n) throw DomainError("subspace is not inside L");
  if (s.dim() == 0) return KSubspace<S>::full(n, ext.K().zero(), ext.K().one());
  const auto& b = ext.canonical_basis();
  Matrix<FieldElement<S>> gram(n, n, ext.K().zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      gram(i, j) = ext.trace_K(b[i] * b[j]);
      gram(j, i) = gram(i, j);
    }
  Matrix<FieldElement<S>> cond = s.basis() * gram;
  return KSubspace<S>::span(kernel(cond));
}

}  // namespace lgrank
