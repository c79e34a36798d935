// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lgrank {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the supported domain (bad descriptor, wrong field, bad shape).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A structural check failed: something that must hold exactly did not.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Exact rational number backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) : q_(n, d) {
    if (d == 0) throw DomainError("zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  static Rational parse(const std::string& s);

  const mpq_class& value() const { return q_; }
  mpq_class& value() { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  Rational inverse() const {
    if (is_zero()) throw SingularMatrixError("inverse of zero");
    return Rational(mpq_class(1) / q_);
  }
  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw SingularMatrixError("division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) { a.q_ = -a.q_; return a; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  // acc += a * b without building an expression temporary per call
  static void fma(Rational& acc, const Rational& a, const Rational& b, Rational& scratch) {
    mpq_mul(scratch.q_.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(acc.q_.get_mpq_t(), acc.q_.get_mpq_t(), scratch.q_.get_mpq_t());
  }

 private:
  mpq_class q_;
};

// Element of the prime field F_p. p == 0 marks a placeholder that adopts the
// modulus of the other operand (default-constructed zero).
class ModP {
 public:
  ModP() = default;
  ModP(long v, std::uint32_t p) : p_(p) {
    if (p == 0) throw DomainError("ModP needs a modulus");
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  ModP inverse() const;
  std::string str() const { return std::to_string(v_); }

  ModP& operator+=(const ModP& o) {
    adopt(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + o.v_) % p_);
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    adopt(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + p_ - o.v_) % p_);
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    adopt(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(ModP a) {
    if (a.v_ != 0) a.v_ = a.p_ - a.v_;
    return a;
  }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }

  static void fma(ModP& acc, const ModP& a, const ModP& b, ModP&) { acc += a * b; }

 private:
  void adopt(const ModP& o) {
    if (p_ == 0) p_ = o.p_;
    if (p_ == 0) p_ = 1;  // both placeholders: value stays 0
  }
  std::uint32_t v_{0};
  std::uint32_t p_{0};
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const ModP& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return x.inverse(); }
inline ModP inverse(const ModP& x) { return x.inverse(); }
// Bareiss pays off only when entries grow; over F_p plain elimination is used.
inline bool prefers_fraction_free(const Rational&) { return true; }
inline bool prefers_fraction_free(const ModP&) { return false; }
inline Rational one_like(const Rational&) { return Rational(1); }
inline ModP one_like(const ModP& z) {
  if (z.modulus() == 0) throw DomainError("ModP prototype without modulus");
  return ModP(1, z.modulus());
}

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.str(); }

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool characteristic_zero = true;
  static Rational from_int(long v, std::uint32_t) { return Rational(v); }
  static Rational parse(const std::string& s, std::uint32_t) { return Rational::parse(s); }
  static const char* name() { return "rational"; }
};

template <>
struct ScalarTraits<ModP> {
  static constexpr bool characteristic_zero = false;
  static ModP from_int(long v, std::uint32_t p) { return ModP(v, p); }
  static ModP parse(const std::string& s, std::uint32_t p);
  static const char* name() { return "modp"; }
};

}  // namespace lgrank
