// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgrank/codes.hpp"

namespace lgrank {

using MultiIndex = std::vector<std::size_t>;

enum class MonomialOrder { grevlex, grlex };
std::string order_name(MonomialOrder o);
// a < b in the order; both orders compare total degree first
bool order_less(const MultiIndex& a, const MultiIndex& b, MonomialOrder o);

std::size_t weight(const MultiIndex& i);
// all of Delta(n_1) x ... x Delta(n_m), first coordinate fastest
std::vector<MultiIndex> delta_grid(const std::vector<std::size_t>& n);
// key (i_m, ..., i_1) ascending: the reverse lexicographic row/column order
bool revlex_less(const MultiIndex& a, const MultiIndex& b);

// f(a, N) = min { prod b_i : 1 <= b_i <= a_i, sum b_i = N }
std::size_t f_min_product_bruteforce(const std::vector<std::size_t>& a, std::size_t total);
std::size_t f_min_product_closed(const std::vector<std::size_t>& a, std::size_t total);
std::size_t f_min_product(const std::vector<std::size_t>& a, std::size_t total);  // both, compared

// (n_s - l) prod_{i<s} n_i for d = sum_{i>s} (n_i - 1) + l, n sorted descending
std::size_t af_lower_bound(const std::vector<std::size_t>& n, std::size_t d);
// d / min n_i * prod n_i
Rational sz_kernel_bound(const std::vector<std::size_t>& n, std::size_t d);

struct RmDimension {
  std::size_t monomial_count{0};
  std::size_t composition_sum{0};
  std::size_t generating_function{0};
  bool agree() const { return monomial_count == composition_sum && composition_sum == generating_function; }
};
RmDimension rm_dimension_all(std::size_t r, const std::vector<std::size_t>& n);
std::size_t rm_dimension(std::size_t r, const std::vector<std::size_t>& n);
// min { prod (n_i - u_i) : |u| <= r, u_i < n_i }
std::size_t rm_min_distance_bruteforce(std::size_t r, const std::vector<std::size_t>& n);
std::size_t rm_min_distance(std::size_t r, const std::vector<std::size_t>& n);
std::size_t rm_max_degree(const std::vector<std::size_t>& n);  // p = sum (n_i - 1)

// Hamming distance (n - l) n^(m - s - 1) of the classical code on an n^m grid, r = s(n-1) + l
std::size_t classical_rm_distance(std::size_t r, std::size_t n, std::size_t m);

template <class S>
struct GeneratorFactorization {
  std::vector<MultiIndex> rows;     // theta monomials, revlex
  std::vector<MultiIndex> columns;  // basis monomials alpha^j, revlex
  Matrix<FieldElement<S>> g;        // evaluation generator matrix over L
  Matrix<FieldElement<S>> y;        // block recursion, over K
  Matrix<FieldElement<S>> diag;     // Diag(B_m) over L
  Matrix<FieldElement<S>> grid;     // monomials on the root-of-unity grid, over K
  bool factorization_holds{false};  // G == Y Diag
  bool grid_matches{false};         // Y == grid
  std::size_t hamming_distance{0};  // brute force over column subsets
  std::size_t hamming_formula{0};
};

struct AfViolation {
  std::size_t trial;
  std::string check;
  std::size_t rank;
  std::string bound;
};

struct AfReport {
  std::size_t trials{0};
  std::size_t checks{0};
  std::vector<AfViolation> violations;
};

// theta-polynomial view of L[G] for an abelian group with chosen generators.
template <class S>
class ThetaAlgebra {
 public:
  using Elem = FieldElement<S>;
  using Vec = LGElement<S>;

  explicit ThetaAlgebra(GroupAlgebra<S> alg);

  const GroupAlgebra<S>& algebra() const { return alg_; }
  const Extension<S>& ext() const { return alg_.ext(); }
  const std::vector<std::size_t>& type() const { return n_; }
  std::size_t m() const { return n_.size(); }
  std::size_t max_degree() const { return rm_max_degree(n_); }

  std::size_t group_index(const MultiIndex& i) const;  // exponents taken modulo n
  const MultiIndex& exponent(std::size_t g) const { return ab_->exponents.at(g); }
  Vec monomial(const MultiIndex& i) const;
  Vec monomial(const MultiIndex& i, const Elem& c) const;
  Vec theta(std::size_t i) const;
  // theta^(-i)
  Vec inv_monomial(const MultiIndex& i) const;
  Vec theta_minus_one() const;  // theta^(-1,...,1)

  std::optional<std::size_t> degree(const Vec& p) const;
  MultiIndex leading_exponent(const Vec& p, MonomialOrder o) const;

  Code<S> rm_code(std::size_t r) const;
  Code<S> rm_inv_code(std::size_t r) const;  // RM over theta_inv
  Code<S> rm_dual_closed(std::size_t r) const;
  // generic dual, compared with the closed form
  Code<S> rm_dual(std::size_t r) const;
  // (RM(r)(B))^perp = RM_inv(p-r-1)(theta^(-1)(B*))
  bool rm_dual_evaluation_check(std::size_t r, const Basis<S>& b) const;

  // monic theta_i-polynomial of degree |v| vanishing on span(v) inside L_i
  Vec annihilator_poly(const std::vector<Elem>& v, std::size_t i) const;
  Vec min_weight_codeword(std::size_t r) const;

  GeneratorFactorization<S> rm_generator_factorization(std::size_t r) const;
  Matrix<Elem> classical_rm_generator(std::size_t r) const;

  Vec random_polynomial(Rng& rng, long height) const;
  AfReport af_random_property_suite(std::size_t trials, std::uint64_t seed, long height = 3) const;

 private:
  void require_kummer() const;
  Elem root_of_unity(std::size_t order) const;  // zeta_order as a K element
  GroupAlgebra<S> alg_;
  const AbelianStructure* ab_;
  std::vector<std::size_t> n_;
};

// Hamming minimum distance of the row space of a K-matrix: N - max |S| with
// rank of the columns S below k.
template <class T>
std::size_t hamming_distance_bruteforce(const Matrix<T>& gen);

extern template class ThetaAlgebra<Rational>;
extern template class ThetaAlgebra<ModP>;

}  // namespace lgrank
