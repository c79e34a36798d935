// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

using namespace lgtest;

TEST(Combinatorics, MinProduct) {
  EXPECT_EQ(f_min_product({3, 3}, 4), 3u);
  EXPECT_EQ(f_min_product({5}, 5), 5u);
  EXPECT_EQ(f_min_product({3, 3}, 6), 9u);
  EXPECT_EQ(f_min_product_closed({4, 2, 3}, 5), f_min_product_bruteforce({4, 2, 3}, 5));
}

TEST(Combinatorics, MinProductClosedFormExhaustive) {
  for (std::size_t a = 2; a <= 8; ++a)
    for (std::size_t b = 2; a * b <= 64; ++b)
      for (std::size_t c = 1; a * b * c <= 64; ++c)
        for (std::size_t total = 3; total <= a + b + c; ++total) {
          std::vector<std::size_t> v{a, b, c};
          EXPECT_EQ(f_min_product_closed(v, total), f_min_product_bruteforce(v, total));
        }
}

TEST(Combinatorics, AlonFurediAndSchwartzZippel) {
  EXPECT_EQ(af_lower_bound({3, 3}, 1), 6u);
  EXPECT_EQ(af_lower_bound({3, 2}, 1), 3u);
  EXPECT_EQ(af_lower_bound({4, 2, 3}, 0), 24u);
  EXPECT_EQ(sz_kernel_bound({3, 3}, 0), Rational(0));
  EXPECT_EQ(sz_kernel_bound({3, 3}, 1), Rational(3));
  EXPECT_EQ(sz_kernel_bound({4, 2}, 2), Rational(8));
}

TEST(Combinatorics, DimensionsAndDistances) {
  EXPECT_EQ(rm_dimension(1, {2, 3}), 3u);
  EXPECT_EQ(rm_dimension(0, {3, 3}), 1u);
  EXPECT_EQ(rm_dimension(2, {3, 3}), 6u);
  std::vector<std::size_t> k;
  for (std::size_t r = 0; r <= 3; ++r) k.push_back(rm_dimension(r, {2, 3}));
  EXPECT_EQ(k, (std::vector<std::size_t>{1, 3, 5, 6}));
  EXPECT_EQ(rm_min_distance(1, {3, 3}), 6u);
  EXPECT_EQ(rm_min_distance(1, {3, 2}), 3u);
  EXPECT_EQ(rm_min_distance(4, {3, 3}), 1u);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t r = 0; r + 1 <= n; ++r) EXPECT_EQ(rm_min_distance(r, {n, n}), n * n - n * r);
}

TEST(Combinatorics, AllTypesUpTo64) {
  std::vector<std::vector<std::size_t>> types;
  std::function<void(std::vector<std::size_t>, std::size_t)> gen = [&](std::vector<std::size_t> t, std::size_t prod) {
    if (!t.empty()) types.push_back(t);
    for (std::size_t n = t.empty() ? 2 : t.back(); prod * n <= 64; ++n) {
      auto u = t;
      u.push_back(n);
      gen(u, prod * n);
    }
  };
  gen({}, 1);
  for (const auto& n : types) {
    const std::size_t p = rm_max_degree(n);
    for (std::size_t r = 0; r <= p; ++r) {
      EXPECT_TRUE(rm_dimension_all(r, n).agree());
      EXPECT_EQ(rm_min_distance(r, n), rm_min_distance_bruteforce(r, n));
      if (r < p) EXPECT_EQ(rm_dimension(r, n) + rm_dimension(p - r - 1, n), rm_dimension(p, n));
    }
  }
}

TEST(Orders, LeadingTermConventions) {
  EXPECT_TRUE(order_less({1, 0}, {0, 2}, MonomialOrder::grevlex));
  EXPECT_TRUE(order_less({1, 0}, {0, 2}, MonomialOrder::grlex));
  EXPECT_TRUE(order_less({0, 1}, {1, 0}, MonomialOrder::grlex));
  EXPECT_FALSE(order_less({1, 1}, {1, 1}, MonomialOrder::grevlex));
  auto g = delta_grid({2, 3});
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g[1], (MultiIndex{1, 0}));
  EXPECT_EQ(g[2], (MultiIndex{0, 1}));
}

TEST(ThetaAlgebra, DegreeAndCodes) {
  auto e = kummer23();
  GroupAlgebra<Rational> alg(e);
  ThetaAlgebra<Rational> th(alg);
  EXPECT_EQ(th.type(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(th.degree(alg.identity()), 0u);
  EXPECT_EQ(th.degree(alg.compose(th.theta(0), th.theta(1))), 2u);
  EXPECT_FALSE(th.degree(alg.zero()));
  auto rm1 = th.rm_code(1);
  EXPECT_EQ(rm1, Code<Rational>::from_generators(alg, {alg.identity(), th.theta(0), th.theta(1)}));
  EXPECT_EQ(th.rm_code(0).dim(), 1u);
}

TEST(ThetaAlgebra, Duals) {
  auto e = kummer23();
  GroupAlgebra<Rational> alg(e);
  ThetaAlgebra<Rational> th(alg);
  EXPECT_EQ(th.rm_dual(3).dim(), 0u);
  for (std::size_t r = 0; r <= 3; ++r) {
    EXPECT_EQ(th.rm_dual(r), th.rm_code(r).dual());
    EXPECT_EQ(th.rm_dual_closed(r), th.rm_code(r).dual());
  }
  EXPECT_EQ(th.rm_dual(1).dim(), 3u);
  Rng rng(2);
  EXPECT_TRUE(th.rm_dual_evaluation_check(1, random_basis(*e, rng)));
}

TEST(ThetaAlgebra, AnnihilatorPolynomials) {
  auto e = kummer3();
  GroupAlgebra<Rational> alg(e);
  ThetaAlgebra<Rational> th(alg);
  EXPECT_EQ(th.annihilator_poly({}, 0), alg.identity());
  EXPECT_EQ(th.annihilator_poly({e->L().one()}, 0), th.theta(0) - alg.identity());
  EXPECT_EQ(th.annihilator_poly({e->radical(0)}, 0), th.theta(0) - alg.monomial(e->zeta(), 0));
}

TEST(ThetaAlgebra, MinimumWeightCodewords) {
  auto e = kummer33();
  GroupAlgebra<Rational> alg(e);
  ThetaAlgebra<Rational> th(alg);
  const auto one = e->L().one();
  auto expected = alg.monomial((one - e->zeta()).inverse(), 0);
  expected = alg.compose(expected, th.theta(1) - alg.monomial(e->zeta(), 0));
  EXPECT_EQ(th.min_weight_codeword(1), expected);
  for (std::size_t r = 0; r <= 4; ++r) {
    auto w = th.min_weight_codeword(r);
    EXPECT_EQ(alg.rank_of(w), rm_min_distance(r, {3, 3})) << r;
    EXPECT_LE(*th.degree(w), r);
    EXPECT_TRUE(th.rm_code(r).contains(w));
  }
}

TEST(ThetaAlgebra, KummerRequired) {
  auto f = finite(2, 4);
  GroupAlgebra<ModP> alg(f);
  ThetaAlgebra<ModP> th(alg);
  EXPECT_THROW(th.min_weight_codeword(1), DomainError);
  EXPECT_THROW(ThetaAlgebra<Rational>(GroupAlgebra<Rational>(s3(2))), DomainError);
}

TEST(ThetaAlgebra, GeneratorFactorization) {
  for (auto e : {kummer3(), biquadratic(), kummer33(), tower(6, {{2, Rational(2)}, {3, Rational(3)}})}) {
    GroupAlgebra<Rational> alg(e);
    ThetaAlgebra<Rational> th(alg);
    for (std::size_t r = 0; r <= th.max_degree(); ++r) {
      auto f = th.rm_generator_factorization(r);
      EXPECT_TRUE(f.factorization_holds);
      EXPECT_TRUE(f.grid_matches);
      if (r == 0) {
        ASSERT_EQ(f.y.rows(), 1u);
        for (std::size_t j = 0; j < f.y.cols(); ++j) EXPECT_TRUE(f.y(0, j).is_one());
      }
      if (f.hamming_formula != 0) EXPECT_EQ(f.hamming_distance, f.hamming_formula);
    }
  }
  EXPECT_EQ(classical_rm_distance(1, 3, 2), 6u);
  EXPECT_EQ(classical_rm_distance(3, 3, 2), 2u);
}

TEST(ThetaAlgebra, VandermondeForOneVariable) {
  auto e = kummer3();
  GroupAlgebra<Rational> alg(e);
  ThetaAlgebra<Rational> th(alg);
  auto f = th.rm_generator_factorization(2);
  // rows theta^i, columns alpha^j: entry zeta^(ij)
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(f.y(i, j), e->restrict(e->zeta()).pow(static_cast<long>(i * j)));
}

TEST(ThetaAlgebra, AlonFurediSuite) {
  auto e = kummer33();
  GroupAlgebra<Rational> alg(e);
  ThetaAlgebra<Rational> th(alg);
  auto rep = th.af_random_property_suite(100, 7);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_EQ(rep.trials, 100u);
  // a monomial has full rank
  EXPECT_EQ(alg.rank_of(th.monomial({2, 1})), 9u);
  auto b = biquadratic();
  GroupAlgebra<Rational> ba(b);
  ThetaAlgebra<Rational> bt(ba);
  EXPECT_EQ(af_lower_bound({2, 2}, 2), 1u);
  EXPECT_TRUE(bt.af_random_property_suite(50, 3).violations.empty());
}
