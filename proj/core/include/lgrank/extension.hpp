// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgrank/field.hpp"
#include "lgrank/matrix.hpp"
#include "lgrank/scalar.hpp"

namespace lgrank {

struct Radical {
  long order{2};
  Rational radicand{2};
};

// Declarative description of a Galois extension L/K.
//   finite: K = F_p, L = F_p[x]/(polynomial)
//   tower:  L = Q(zeta_e)(a_1^(1/n_1), ..., a_m^(1/n_m)) with n_i | e and
//           K = Q(zeta_e) (base = cyclotomic) or K = Q (base = rational).
struct FieldSpec {
  enum class Backend { finite, tower };
  enum class Base { cyclotomic, rational };

  Backend backend{Backend::tower};
  // finite backend
  std::uint32_t p{2};
  std::size_t degree{1};
  std::vector<long> polynomial;  // low to high, monic; empty means "smallest irreducible"
  // tower backend
  long root_of_unity{1};
  Base base{Base::cyclotomic};
  std::vector<Radical> radicals;

  static FieldSpec finite_field(std::uint32_t p, std::size_t degree, std::vector<long> poly = {});
  static FieldSpec tower(long e, std::vector<Radical> radicals, Base base = Base::cyclotomic);

  static FieldSpec parse(const std::string& text);
  static FieldSpec load(const std::string& path);
  std::string canonical_text() const;
  std::uint64_t hash() const;
  std::string summary() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.canonical_text() == b.canonical_text();
  }
};

template <class S>
struct Automorphism {
  std::vector<long> params;  // tower: (s, k_1..k_m); finite: (j) for Frobenius^j
  std::string label;
};

// Exponent coordinates for an abelian group with chosen generators.
struct AbelianStructure {
  std::vector<std::size_t> generators;  // group indices of theta_1..theta_m
  std::vector<std::size_t> orders;      // n_1..n_m
  std::vector<std::size_t> index;       // mixed radix exponents (theta_1 fastest) -> group index
  std::vector<std::vector<std::size_t>> exponents;  // group index -> exponent vector
};

template <class S>
class Basis;

template <class S>
class Extension {
 public:
  using Elem = FieldElement<S>;
  using KMatrix = Matrix<Elem>;

  static std::shared_ptr<const Extension> create(const FieldSpec& spec);
  Extension(const Extension&) = delete;
  Extension& operator=(const Extension&) = delete;

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t hash() const { return spec_.hash(); }
  const Field<S>& L() const { return *L_; }
  const Field<S>& K() const { return *K_; }
  std::size_t degree() const { return N_; }

  const std::vector<Automorphism<S>>& group() const { return group_; }
  std::size_t group_order() const { return group_.size(); }
  std::size_t identity() const { return 0; }
  std::size_t compose(std::size_t i, std::size_t j) const { return table_[i * N_ + j]; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::optional<std::size_t> find(const std::vector<long>& params) const;
  bool is_abelian() const;
  const AbelianStructure* abelian() const { return abelian_ ? &*abelian_ : nullptr; }

  Elem apply(std::size_t g, const Elem& x) const;
  Elem trace(const Elem& x) const;    // in L, lies in K
  Elem trace_K(const Elem& x) const;  // as a K element
  Elem norm(const Elem& x) const;

  // K coordinates in the canonical (monomial) basis
  std::vector<Elem> coordinates(const Elem& x) const { return L_->to_base(x); }
  Elem from_coordinates(const std::vector<Elem>& c) const { return L_->from_base(c); }
  Elem embed(const Elem& k) const { return L_->embed(k); }
  Elem restrict(const Elem& x) const { return L_->restrict_to_base(x); }

  const Basis<S>& canonical_basis() const { return *canonical_; }
  Basis<S> make_basis(std::vector<Elem> elems) const;
  Basis<S> dual_basis(const Basis<S>& b) const;

  Elem normal_element() const;
  Elem primitive_element() const;
  // K-basis (as L elements) of the fixed field of the listed automorphisms
  std::vector<Elem> fixed_field(const std::vector<std::size_t>& gens) const;
  // L_i: fixed field of all abelian generators except theta_i (0-based i)
  std::vector<Elem> fixed_field_basis(std::size_t i) const;

  // Matrix over K of g in the canonical basis (column j: coordinates of g(b_j)).
  KMatrix automorphism_matrix(std::size_t g) const;
  KMatrix multiplication_matrix(const Elem& x) const { return L_->mult_matrix(x); }

  // Tower: zeta_e and the radicals. Finite: the generator x.
  Elem zeta() const;
  Elem radical(std::size_t i) const;
  std::size_t num_radicals() const { return spec_.radicals.size(); }

  // Deterministic candidate sequence used by the small-coefficient searches.
  Elem candidate(std::size_t k) const;

 private:
  explicit Extension(FieldSpec spec);
  void build_tower();
  void build_finite();
  void build_group(const std::vector<std::vector<Elem>>& images,
                   std::vector<Automorphism<S>> autos);
  void build_abelian();
  void certify();

  FieldSpec spec_;
  std::unique_ptr<Field<S>> K_;
  std::unique_ptr<Field<S>> L_;
  std::size_t N_{0};
  std::size_t zeta_var_{SIZE_MAX};
  std::vector<std::size_t> radical_var_;
  std::vector<Automorphism<S>> group_;
  // per automorphism: prime-field image of each monomial, sparse
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, S>>>> action_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::optional<AbelianStructure> abelian_;
  std::unique_ptr<Basis<S>> canonical_;
};

// Ordered K-basis of L with a cached coordinate map.
template <class S>
class Basis {
 public:
  using Elem = FieldElement<S>;
  Basis(const Extension<S>* ext, std::vector<Elem> elems);

  std::size_t size() const { return elems_.size(); }
  const Elem& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Elem>& elements() const { return elems_; }
  // coordinates of x over K in this basis
  std::vector<Elem> coordinates(const Elem& x) const;
  Elem combine(const std::vector<Elem>& k_coeffs) const;
  // K-matrix with column j = canonical coordinates of b_j
  const Matrix<Elem>& to_canonical() const { return P_; }
  const Matrix<Elem>& from_canonical() const { return Pinv_; }
  friend bool operator==(const Basis& a, const Basis& b) { return a.elems_ == b.elems_; }

 private:
  const Extension<S>* ext_;
  std::vector<Elem> elems_;
  Matrix<Elem> P_, Pinv_;
};

std::vector<long> cyclotomic_polynomial(long e);
long euler_phi(long e);
std::vector<long> units_mod(long e);
bool is_prime(long n);

extern template class Extension<Rational>;
extern template class Extension<ModP>;
extern template class Basis<Rational>;
extern template class Basis<ModP>;

}  // namespace lgrank
