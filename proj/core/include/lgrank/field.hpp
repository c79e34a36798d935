// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "lgrank/matrix.hpp"
#include "lgrank/scalar.hpp"

namespace lgrank {

// One generator x of a monomial algebra together with its monic relation
// x^degree = sum_i tail[i] x^i.
template <class S>
struct Variable {
  std::string name;
  std::size_t degree{1};
  std::vector<S> tail;
};

template <class S>
class Field;

// Element of a Field<S>: dense coordinates over the prime field in the
// monomial basis. The field pointer is not owning.
template <class S>
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field<S>* f, std::vector<S> c) : f_(f), c_(std::move(c)) {}

  const Field<S>* field() const { return f_; }
  const std::vector<S>& coeffs() const { return c_; }
  std::vector<S>& coeffs() { return c_; }
  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_one() const;

  FieldElement& operator+=(const FieldElement& o) {
    adopt(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  FieldElement& operator-=(const FieldElement& o) {
    adopt(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const S& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    FieldElement r = a;
    r *= b;
    return r;
  }
  friend FieldElement operator*(FieldElement a, const S& s) { return a *= s; }
  friend FieldElement operator-(FieldElement a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.c_.size() != b.c_.size()) return a.is_zero() && b.is_zero();
    return a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  FieldElement inverse() const;
  FieldElement pow(long e) const;
  std::string str() const;

 private:
  void adopt(const FieldElement& o);
  const Field<S>* f_{nullptr};
  std::vector<S> c_;
};

// Commutative algebra F[x_1..x_v]/(x_i^{d_i} - tail_i) over the prime field F,
// used only when it is a field. Monomials are laid out in mixed radix with the
// first variable fastest. When `base` is given, its variables are exactly the
// first variables of this field, so an index splits as base_index + D_base*rest.
template <class S>
class Field {
 public:
  Field(std::string name, std::uint32_t characteristic, std::vector<Variable<S>> vars,
        const Field* base = nullptr);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  const std::string& name() const { return name_; }
  std::uint32_t characteristic() const { return p_; }
  std::size_t dim() const { return dim_; }
  const Field* base() const { return base_; }
  std::size_t base_dim() const { return base_ ? base_->dim() : 1; }
  std::size_t degree_over_base() const { return dim_ / base_dim(); }
  const std::vector<Variable<S>>& variables() const { return vars_; }
  const std::vector<std::size_t>& radix() const { return radix_; }

  S scalar(long v) const { return ScalarTraits<S>::from_int(v, p_); }
  FieldElement<S> zero() const { return FieldElement<S>(this, std::vector<S>(dim_, scalar(0))); }
  FieldElement<S> one() const { return from_int(1); }
  FieldElement<S> from_int(long v) const {
    auto z = zero();
    z.coeffs()[0] = scalar(v);
    return z;
  }
  FieldElement<S> from_scalar(const S& s) const {
    auto z = zero();
    z.coeffs()[0] = s;
    return z;
  }
  FieldElement<S> monomial(std::size_t index) const {
    auto z = zero();
    z.coeffs().at(index) = scalar(1);
    return z;
  }
  FieldElement<S> variable(std::size_t v) const;
  FieldElement<S> make(std::vector<S> c) const;

  std::vector<std::size_t> exponents(std::size_t index) const;
  std::size_t index_of(const std::vector<std::size_t>& exps) const;

  void multiply(const std::vector<S>& a, const std::vector<S>& b, std::vector<S>& out) const;

  // Coordinates of x over the base field in the relative monomial basis.
  std::vector<FieldElement<S>> to_base(const FieldElement<S>& x) const;
  FieldElement<S> from_base(const std::vector<FieldElement<S>>& c) const;
  // Image of a base element (same coefficients, padded).
  FieldElement<S> embed(const FieldElement<S>& k) const;
  // Is x in the image of the base field?
  bool in_base(const FieldElement<S>& x) const;
  FieldElement<S> restrict_to_base(const FieldElement<S>& x) const;

  // Matrix of multiplication by x acting on base coordinates (column j holds
  // the coordinates of x times the j-th relative monomial).
  Matrix<FieldElement<S>> mult_matrix(const FieldElement<S>& x) const;
  Matrix<S> prime_mult_matrix(const FieldElement<S>& x) const;

  FieldElement<S> inverse(const FieldElement<S>& x) const;

 private:
  struct Term {
    std::uint32_t index;
    S coeff;
  };
  std::string name_;
  std::uint32_t p_;
  std::vector<Variable<S>> vars_;
  const Field* base_;
  std::vector<std::size_t> radix_;
  std::size_t dim_{1};
  std::vector<std::vector<Term>> table_;  // dim*dim
  // integer copy of table_ (scaled by table_den_) for the rational fast path
  std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> itable_;
  mpz_class table_den_{1};
  void build_integer_table();
};

template <class S>
inline bool is_zero(const FieldElement<S>& x) {
  return x.is_zero();
}
template <class S>
inline FieldElement<S> inverse(const FieldElement<S>& x) {
  return x.inverse();
}
template <class S>
inline bool prefers_fraction_free(const FieldElement<S>&) {
  return ScalarTraits<S>::characteristic_zero;
}
template <class S>
inline FieldElement<S> one_like(const FieldElement<S>& z) {
  if (z.field() == nullptr) throw DomainError("field element without a field");
  return z.field()->one();
}
template <class S>
std::ostream& operator<<(std::ostream& os, const FieldElement<S>& x) {
  return os << x.str();
}

template <>
void Field<Rational>::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b,
                               std::vector<Rational>& out) const;
template <>
void Field<Rational>::build_integer_table();
template <>
FieldElement<Rational> Field<Rational>::inverse(const FieldElement<Rational>& x) const;

extern template class Field<Rational>;
extern template class Field<ModP>;
extern template class FieldElement<Rational>;
extern template class FieldElement<ModP>;

}  // namespace lgrank
