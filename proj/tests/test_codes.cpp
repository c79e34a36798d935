// SPDX-License-Identifier: Apache-2.0
#include "golden_s3.hpp"
#include "support.hpp"

using namespace lgtest;

TEST(FromGenerators, Dimensions) {
  auto e = s3(2);
  GroupAlgebra<Rational> alg(e);
  EXPECT_EQ(Code<Rational>::from_generators(alg, {alg.identity(), alg.identity()}).dim(), 1u);
  std::vector<LGElement<Rational>> all;
  for (std::size_t g = 0; g < 6; ++g) all.push_back(alg.group_element(g));
  EXPECT_EQ(Code<Rational>::from_generators(alg, all), Code<Rational>::full(alg));
  auto z = Code<Rational>::zero_code(alg);
  EXPECT_EQ(z.dim(), 0u);
  EXPECT_EQ(evaluation_code(z, e->canonical_basis()).rows(), 0u);
}

TEST(Distance, GabidulinOverF16IsMRD) {
  auto e = finite(2, 4);
  GroupAlgebra<ModP> alg(e);
  const std::size_t th = *e->find({1});
  auto gab = Code<ModP>::from_generators(alg, {alg.identity(), alg.group_element(th)});
  EXPECT_EQ(gab.dim(), 2u);
  EXPECT_EQ(min_distance_bruteforce(gab), 3u);
  EXPECT_EQ(min_distance_bruteforce(Code<ModP>::from_generators(alg, {alg.identity()})), 4u);
  EXPECT_EQ(min_distance_bruteforce(Code<ModP>::full(alg)), 1u);
  EXPECT_THROW(min_distance_bruteforce(Code<ModP>::full(alg), 1000), BudgetExceeded);
}

TEST(Distance, SampledBound) {
  auto e = kummer33();
  GroupAlgebra<Rational> alg(e);
  EXPECT_EQ(min_rank_sampled_bound(Code<Rational>::from_generators(alg, {alg.identity()}), 5, 1), 9u);
  ThetaAlgebra<Rational> th(alg);
  auto rm = th.rm_code(1);
  const std::size_t plain = min_rank_sampled_bound(rm, 5, 1);
  EXPECT_GE(plain, af_lower_bound({3, 3}, 1));
  EXPECT_EQ(min_rank_sampled_bound(rm, 5, 1, 3, {th.min_weight_codeword(1)}), 6u);
}

TEST(Dual, SmallCases) {
  auto e = s3(2);
  GroupAlgebra<Rational> alg(e);
  EXPECT_EQ(Code<Rational>::full(alg).dual().dim(), 0u);
  std::vector<LGElement<Rational>> rest;
  for (std::size_t g = 1; g < 6; ++g) rest.push_back(alg.group_element(g));
  EXPECT_EQ(Code<Rational>::from_generators(alg, {alg.identity()}).dual(), Code<Rational>::from_generators(alg, rest));
}

TEST(Dual, AbelianDualityAndMatrixDuality) {
  auto e = kummer23();
  GroupAlgebra<Rational> alg(e);
  Rng rng(3);
  for (std::size_t k = 0; k <= 6; k += 2) {
    std::vector<LGElement<Rational>> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(alg.random_element(rng, 2));
    auto c = Code<Rational>::from_generators(alg, gens);
    auto b = random_basis(*e, rng);
    EXPECT_EQ(c.dim() + c.dual().dim(), 6u);
    EXPECT_TRUE(dual_lg_check(c, b));
    EXPECT_TRUE(matrix_duality_check(c, b));
    EXPECT_TRUE(change_of_basis_check(c, b, random_basis(*e, rng)));
  }
  EXPECT_THROW(dual_lg_check(Code<Rational>::zero_code(GroupAlgebra<Rational>(s3(2))), s3(2)->canonical_basis()), Error);
}

TEST(Dual, NormalBasis) {
  auto e = kummer3();
  EXPECT_TRUE(dual_normal_basis_check(*e, e->normal_element()));
  auto f = finite(3, 3);
  EXPECT_TRUE(dual_normal_basis_check(*f, f->normal_element()));
}

TEST(Shorten, Examples) {
  auto e = kummer3();
  GroupAlgebra<Rational> alg(e);
  auto c = Code<Rational>::from_generators(alg, {alg.identity(), alg.trace_element()});
  const auto zero = e->K().zero();
  EXPECT_EQ(shorten(c, KSubspace<Rational>(3, zero)), c);
  EXPECT_EQ(shorten(c, KSubspace<Rational>::full(3, zero, e->K().one())).dim(), 0u);
  EXPECT_EQ(shorten(c, k_span(*e, {e->L().one()})).dim(), 1u);
}

TEST(ProductCode, IdentityAndNonCommutativity) {
  auto e = s3(2);
  GroupAlgebra<Rational> alg(e);
  Rng rng(4);
  auto c = Code<Rational>::from_generators(alg, {alg.random_element(rng, 2), alg.random_element(rng, 2)});
  EXPECT_EQ(product_code(Code<Rational>::from_generators(alg, {alg.identity()}), c), c);
  auto a = Code<Rational>::from_generators(alg, {alg.group_element(*e->find({2, 0}))});
  auto b = Code<Rational>::from_generators(alg, {alg.group_element(*e->find({1, 1}))});
  EXPECT_NE(product_code(a, b), product_code(b, a));
}

TEST(ProductCode, ReedMullerLaw) {
  auto e = kummer23();
  GroupAlgebra<Rational> alg(e);
  ThetaAlgebra<Rational> th(alg);
  for (std::size_t r = 0; r <= 3; ++r)
    for (std::size_t s = 0; r + s <= 3; ++s) EXPECT_EQ(product_code(th.rm_code(r), th.rm_code(s)), th.rm_code(r + s));
}

TEST(GoldenS3, WorkedExample) {
  for (long p : {2, 3, 5}) {
    auto r = golden_s3::check(p);
    EXPECT_TRUE(r.basis_is_canonical) << p;
    EXPECT_TRUE(r.automorphism_matrices) << p;
    EXPECT_TRUE(r.generator_rows) << p;
    EXPECT_TRUE(r.ext_span) << p;
  }
}

TEST(KExpansion, RoundTrip) {
  auto e = kummer3();
  GroupAlgebra<Rational> alg(e);
  Rng rng(5);
  auto a = alg.random_element(rng, 3);
  EXPECT_EQ(from_k_coordinates(*e, k_coordinates(*e, a)), a);
  auto c = Code<Rational>::from_generators(alg, {a});
  EXPECT_EQ(k_expansion(c).dim(), 3u);
}
