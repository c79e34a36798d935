// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgrank/theta_rm.hpp"

namespace lgrank {

enum class Provenance { closed_form, brute_force, assumed };
std::string provenance_name(Provenance p);

struct DistanceFact {
  std::size_t value{0};
  Provenance source{Provenance::assumed};
};

template <class S>
struct ErrorCorrectingPair {
  Code<S> a;
  Code<S> b;
  Code<S> c;
  std::size_t t{0};
  std::optional<DistanceFact> d_a;
  std::optional<DistanceFact> d_b_dual;
  std::optional<DistanceFact> d_c;

  // every distance fact present and none of them assumed
  bool verified() const;
};

// Violated conditions, empty when the pair is valid. B o A in C^perp is checked exactly.
template <class S>
std::vector<std::string> pair_violations(const ErrorCorrectingPair<S>& pair);

// K(r) = {x in A : <b o x, r> = 0 for all b in B} as a K-subspace of K^(N*N)
// in the k_coordinates layout. Not L-linear in general.
template <class S>
KSubspace<S> compute_K(const LGElement<S>& r, const Code<S>& a, const Code<S>& b);

template <class S>
struct DecodeResult {
  std::optional<LGElement<S>> codeword;
  std::string failure;  // reason when codeword is empty
  bool ok() const { return codeword.has_value(); }
};

template <class S>
DecodeResult<S> decode(const ErrorCorrectingPair<S>& pair, const LGElement<S>& r);

// A = RM_inv(a) o theta^(-2), B = RM_inv(b), C = RM(r) o theta^(-1), t = min{k(a), d(p-1-b)} - 1.
template <class S>
ErrorCorrectingPair<S> rm_ecp_construct(const ThetaAlgebra<S>& th, std::size_t r, std::size_t a, std::size_t b);

struct TmaxResult {
  std::size_t t_exhaustive{0};
  std::size_t a{0}, b{0};  // first maximiser, a-major
  std::optional<std::size_t> t_closed_form;  // type (n, n) only
  double alpha{0};
  bool discrepancy() const { return t_closed_form && *t_closed_form != t_exhaustive; }
};
TmaxResult t_max_search(std::size_t r, const std::vector<std::size_t>& n);

double unique_radius(double gamma);  // (1 - gamma) / 2
double ecp_radius(double gamma);     // 2 - gamma - sqrt(3 - 2 gamma)

template <class S>
LGElement<S> random_rank_error(const GroupAlgebra<S>& alg, std::size_t t, std::uint64_t seed, long height = 2);

struct RoundtripReport {
  std::size_t trials{0};
  std::size_t successes{0};
  std::size_t failures{0};      // decoder reported failure
  std::size_t miscorrected{0};  // returned a wrong codeword
  double seconds{0};
  std::vector<std::uint64_t> digests;  // per trial: FNV-1a of received word and outcome
};

// random codeword + random rank-t error, decoded; trial i is seeded with split(seed, i)
template <class S>
RoundtripReport ecp_roundtrip(const ErrorCorrectingPair<S>& pair, std::size_t t, std::size_t trials,
                              std::uint64_t seed, long height = 2);

struct EcpPropertyReport {
  bool k_translation{true};   // K(c + e) = K(e)
  bool adjunction{true};      // <b o a, e> = <b, e o tau(a)>
  bool shortening{true};      // K(e) = Short_supp(e)(A) when rk e < d(B^perp)
  std::size_t trials{0};
  bool ok() const { return k_translation && adjunction && shortening; }
};

template <class S>
EcpPropertyReport ecp_property_checks(const ErrorCorrectingPair<S>& pair, std::size_t error_rank,
                                      std::size_t trials, std::uint64_t seed);

}  // namespace lgrank
