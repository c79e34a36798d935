// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgrank/theta_rm.hpp"

namespace lgrank {

// Finitely supported map exponent -> nonzero coefficient in L.
template <class S>
using SkewPolynomial = std::map<MultiIndex, FieldElement<S>>;

template <class S>
struct WitnessReport {
  MultiIndex lead;            // u with lt(P) = x^u
  std::size_t z_size{0};      // |Z| = prod (n_i - u_i)
  std::size_t sampled{0};
  std::size_t failures{0};    // products that vanish or have the wrong leading term
  std::size_t product_rank{0};  // L-rank of the sampled products
  bool ok() const { return failures == 0 && product_rank == sampled; }
};

// L[x_1..x_m; theta] with x_i a = theta_i(a) x_i, and the map to L[G].
template <class S>
class SkewRing {
 public:
  using Elem = FieldElement<S>;
  using Poly = SkewPolynomial<S>;

  explicit SkewRing(ThetaAlgebra<S> th);

  const ThetaAlgebra<S>& theta() const { return th_; }
  std::size_t m() const { return th_.m(); }

  Poly zero() const { return {}; }
  Poly constant(const Elem& a) const;
  Poly monomial(const Elem& a, const MultiIndex& u) const;
  Poly x(std::size_t i) const;

  Poly add(const Poly& f, const Poly& g) const;
  Poly sub(const Poly& f, const Poly& g) const;
  Poly scale(const Elem& a, const Poly& f) const;  // a f
  Poly mul(const Poly& f, const Poly& g) const;

  // exponents modulo n_i; x_i^(n_i) is central since theta_i^(n_i) = Id
  Poly reduce(const Poly& f) const;
  bool is_reduced(const Poly& f) const;

  LGElement<S> phi(const Poly& f) const;
  Poly phi_inv(const LGElement<S>& p) const;

  std::pair<MultiIndex, Elem> leading_term(const Poly& f, MonomialOrder o) const;

  // For lt(P) = x^u checks that x^v P reduces to a polynomial with leading
  // term x^(u+v) for v in Z = {v : v_i < n_i - u_i}, and that these products
  // are L-independent. All of Z when |Z| <= samples, else a seeded sample.
  WitnessReport<S> af_witness_check(const LGElement<S>& p, MonomialOrder o, std::size_t samples = 256,
                                    std::uint64_t seed = 0) const;

  std::string to_text(const Poly& f) const;
  Poly random(Rng& rng, std::size_t terms, std::size_t max_exp, long height) const;

 private:
  void insert(Poly& f, const MultiIndex& u, const Elem& c) const;
  ThetaAlgebra<S> th_;
};

extern template class SkewRing<Rational>;
extern template class SkewRing<ModP>;

}  // namespace lgrank
