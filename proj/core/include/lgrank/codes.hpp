// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgrank/group_algebra.hpp"

namespace lgrank {

// L-linear subspace of L[G], stored in reduced echelon form over L on the
// coefficient vectors.
template <class S>
class Code {
 public:
  using Elem = FieldElement<S>;
  using Vec = LGElement<S>;
  using LMatrix = Matrix<Elem>;

  Code(GroupAlgebra<S> alg, Subspace<Elem> space);

  static Code from_generators(const GroupAlgebra<S>& alg, const std::vector<Vec>& gens);
  static Code zero_code(const GroupAlgebra<S>& alg);
  static Code full(const GroupAlgebra<S>& alg);

  const GroupAlgebra<S>& algebra() const { return alg_; }
  const Extension<S>& ext() const { return alg_.ext(); }
  std::size_t length() const { return alg_.N(); }
  std::size_t dim() const { return space_.dim(); }
  const Subspace<Elem>& space() const { return space_; }
  // generator matrix over L, one row per basis codeword
  const LMatrix& generator_matrix() const { return space_.basis(); }
  Vec basis_vector(std::size_t i) const { return Vec(space_.vector(i)); }
  std::vector<Vec> basis() const;

  bool contains(const Vec& v) const { return space_.contains(v.coeffs()); }
  bool contains(const Code& o) const { return space_.contains(o.space_); }
  // sum_i lambda_i c_i over the echelon basis
  Vec combine(const std::vector<Elem>& lambda) const;

  // dual with respect to <a, b> = sum_g a_g b_g
  Code dual() const;
  Code sum(const Code& o) const;
  Code intersect(const Code& o) const;
  // {c o h : c in C}
  Code compose_right(const Vec& h) const;

  friend bool operator==(const Code& a, const Code& b) { return a.space_ == b.space_; }
  friend bool operator!=(const Code& a, const Code& b) { return !(a == b); }

 private:
  GroupAlgebra<S> alg_;
  Subspace<Elem> space_;
};

// Rows ev_B(c) for the echelon basis of C.
template <class S>
Matrix<FieldElement<S>> evaluation_code(const Code<S>& c, const Basis<S>& b);

// Ext_B of a vector: column j holds the B-coordinates of v_j.
template <class S>
Matrix<FieldElement<S>> ext_matrix(const Extension<S>& ext, const std::vector<FieldElement<S>>& v,
                                   const Basis<S>& b);

// K-basis of the matrix code {A(c, B1, B2) : c in C}: the matrices A(beta_j c_i, B1, B2)
// for the canonical K-basis beta of L.
template <class S>
std::vector<Matrix<FieldElement<S>>> ext_matrix_code(const Code<S>& c, const Basis<S>& b1, const Basis<S>& b2);

// Same for a vector code given by a generator matrix over L.
template <class S>
std::vector<Matrix<FieldElement<S>>> ext_vector_code(const Extension<S>& ext, const Matrix<FieldElement<S>>& gen,
                                                     const Basis<S>& b);

// Subspace of K^(rows*cols) spanned by the flattened (row-major) matrices.
template <class S>
KSubspace<S> matrix_span(const std::vector<Matrix<FieldElement<S>>>& ms, std::size_t rows, std::size_t cols,
                         const FieldElement<S>& zero);
// dual for Tr(A B^T): in the row-major flattening this is the standard form
template <class S>
KSubspace<S> matrix_code_dual(const KSubspace<S>& code) {
  return code.orthogonal();
}

// Generator matrix of the dual for the standard inner product on L^M.
template <class T>
Matrix<T> vector_dual(const Matrix<T>& gen, std::size_t length) {
  if (gen.rows() == 0) return Matrix<T>::identity(length, gen.zero(), one_like(gen.zero()));
  return kernel(gen);
}

// K-subspace of K^(N*N) carrying a_g's canonical coordinates at g*N + j.
template <class S>
std::vector<FieldElement<S>> k_coordinates(const Extension<S>& ext, const LGElement<S>& a);
template <class S>
LGElement<S> from_k_coordinates(const Extension<S>& ext, const std::vector<FieldElement<S>>& x);
template <class S>
KSubspace<S> k_expansion(const Code<S>& c);

// {c in C : c(w) = 0 for all w in I}
template <class S>
Code<S> shorten(const Code<S>& c, const KSubspace<S>& i);

// Span_L { b o a : a in A, b in B }; spanned by b_i o (beta_j a_l) since
// composition is only semilinear in its right argument.
template <class S>
Code<S> product_code(const Code<S>& b, const Code<S>& a);

struct DistanceInterval {
  std::size_t lower{0};
  std::size_t upper{0};
  bool exact() const { return lower == upper; }
};

// Exact minimum rank of a code over a finite field; throws BudgetExceeded when
// p^(N k) exceeds the budget.
std::size_t min_distance_bruteforce(const Code<ModP>& c, std::uint64_t budget = 1ULL << 20);

// Minimum rank over pseudorandom codewords (plus any extra candidates); an
// upper bound on d(C).
template <class S>
std::size_t min_rank_sampled_bound(const Code<S>& c, std::size_t trials, std::uint64_t seed, long height = 3,
                                   const std::vector<LGElement<S>>& extra = {});

// (C^perp)(B) equals the vector dual of C(B*).
template <class S>
bool dual_lg_check(const Code<S>& c, const Basis<S>& b);
// Ext_B(V)^perp = Ext_{B*}(V^perp) for the vector code V = C(B).
template <class S>
bool matrix_duality_check(const Code<S>& c, const Basis<S>& b);
// C(B1) = C(B2) X where B1 = B2 X
template <class S>
bool change_of_basis_check(const Code<S>& c, const Basis<S>& b1, const Basis<S>& b2);
// The dual basis of the normal basis (g(alpha))_g is (g(beta))_g with beta = first dual entry.
template <class S>
bool dual_normal_basis_check(const Extension<S>& ext, const FieldElement<S>& alpha);

extern template class Code<Rational>;
extern template class Code<ModP>;

}  // namespace lgrank
