// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "lgrank/extension.hpp"
#include "lgrank/rng.hpp"
#include "lgrank/subspace.hpp"

namespace lgrank {

// Element sum_g a_g g of L[G], coefficients in the canonical group order.
template <class S>
class LGElement {
 public:
  using Elem = FieldElement<S>;
  LGElement() = default;
  explicit LGElement(std::vector<Elem> c) : c_(std::move(c)) {}

  std::size_t size() const { return c_.size(); }
  const Elem& operator[](std::size_t g) const { return c_[g]; }
  Elem& operator[](std::size_t g) { return c_[g]; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  LGElement& operator+=(const LGElement& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  LGElement& operator-=(const LGElement& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend LGElement operator+(LGElement a, const LGElement& b) { return a += b; }
  friend LGElement operator-(LGElement a, const LGElement& b) { return a -= b; }
  friend LGElement operator-(LGElement a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  // left multiplication by a scalar of L: lambda * sum a_g g = sum (lambda a_g) g
  friend LGElement operator*(const Elem& lambda, LGElement a) {
    for (auto& x : a.c_) x = lambda * x;
    return a;
  }
  friend bool operator==(const LGElement& a, const LGElement& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LGElement& a, const LGElement& b) { return !(a == b); }

 private:
  void check(const LGElement& o) const {
    if (o.c_.size() != c_.size()) throw DomainError("L[G] elements of different length");
  }
  std::vector<Elem> c_;
};

struct RankReport {
  std::size_t endo_rank_K{0};          // rank of A(a, B) over K
  std::size_t moore_rank_L{0};         // rank of M_G(ev_B(a)) over L
  std::size_t dickson_rank_L{0};       // rank of D_G(a) over L
  std::size_t annihilator_codim{0};    // N - dim Ann(a)
  bool agree() const {
    return endo_rank_K == moore_rank_L && moore_rank_L == dickson_rank_L &&
           dickson_rank_L == annihilator_codim;
  }
};

// The skew group algebra L[G] with (a g) o (b h) = (a g(b)) (gh).
template <class S>
class GroupAlgebra {
 public:
  using Elem = FieldElement<S>;
  using Vec = LGElement<S>;
  using LMatrix = Matrix<Elem>;

  explicit GroupAlgebra(std::shared_ptr<const Extension<S>> ext);

  const Extension<S>& ext() const { return *ext_; }
  const std::shared_ptr<const Extension<S>>& ext_ptr() const { return ext_; }
  std::size_t N() const { return ext_->degree(); }
  const Field<S>& L() const { return ext_->L(); }
  const Field<S>& K() const { return ext_->K(); }

  Vec zero() const;
  Vec identity() const { return group_element(ext_->identity()); }
  Vec group_element(std::size_t g) const;
  Vec monomial(const Elem& a, std::size_t g) const;
  Vec trace_element() const;
  Vec from_coeffs(std::vector<Elem> c) const;

  Vec compose(const Vec& u, const Vec& v) const;
  Elem evaluate(const Vec& a, const Elem& x) const;
  std::vector<Elem> ev_vector(const Vec& a, const std::vector<Elem>& b) const;
  Vec adjoint(const Vec& u) const;
  Elem inner(const Vec& a, const Vec& b) const;

  LMatrix moore_matrix(const std::vector<Elem>& v) const;
  LMatrix dickson_matrix(const Vec& a) const;
  // A(a, B1, B2): column j holds the B2-coordinates of a(B1_j)
  LMatrix endo_matrix(const Vec& a, const Basis<S>& b1, const Basis<S>& b2) const;
  LMatrix endo_matrix(const Vec& a, const Basis<S>& b) const { return endo_matrix(a, b, b); }
  LMatrix endo_matrix(const Vec& a) const { return endo_matrix(a, ext_->canonical_basis()); }
  Vec interpolate(const LMatrix& m, const Basis<S>& b) const;
  Vec interpolate(const LMatrix& m) const { return interpolate(m, ext_->canonical_basis()); }

  RankReport rank_report(const Vec& a) const;
  std::size_t rank_of(const Vec& a) const;  // all four agree or InvariantViolation
  std::size_t rank_fast(const Vec& a) const { return rank(endo_matrix(a)); }

  KSubspace<S> kernel_subspace(const Vec& a) const;
  KSubspace<S> image_subspace(const Vec& a) const;
  KSubspace<S> support(const Vec& a) const { return image_subspace(adjoint(a)); }
  // L-subspace {f : f o a = 0} of L^N
  Subspace<Elem> annihilator(const Vec& a) const;

  bool dickson_similarity_check(const Vec& a) const;

  // random element with coefficients of height h on the prime-field monomials
  Elem random_scalar(Rng& rng, long height) const;
  Elem random_K_scalar(Rng& rng, long height) const;
  Vec random_element(Rng& rng, long height) const;
  // random element of rank exactly t (retries bounded)
  Vec random_rank(Rng& rng, std::size_t t, long height) const;

 private:
  std::shared_ptr<const Extension<S>> ext_;
};

extern template class GroupAlgebra<Rational>;
extern template class GroupAlgebra<ModP>;

}  // namespace lgrank
