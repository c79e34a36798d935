// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "support.hpp"

using namespace lgtest;

namespace {

struct Kummer33 : ::testing::Test {
  static void SetUpTestSuite() {
    ext = new QExt(kummer33());
    alg = new GroupAlgebra<Rational>(*ext);
    th = new ThetaAlgebra<Rational>(*alg);
    pair = new ErrorCorrectingPair<Rational>(rm_ecp_construct(*th, 1, 1, 1));
  }
  static void TearDownTestSuite() {
    delete pair;
    delete th;
    delete alg;
    delete ext;
  }
  static QExt* ext;
  static GroupAlgebra<Rational>* alg;
  static ThetaAlgebra<Rational>* th;
  static ErrorCorrectingPair<Rational>* pair;

  static LGElement<Rational> random_codeword(Rng& rng) {
    std::vector<FieldElement<Rational>> msg;
    for (std::size_t i = 0; i < pair->c.dim(); ++i) msg.push_back(alg->random_scalar(rng, 2));
    return pair->c.combine(msg);
  }
};
QExt* Kummer33::ext = nullptr;
GroupAlgebra<Rational>* Kummer33::alg = nullptr;
ThetaAlgebra<Rational>* Kummer33::th = nullptr;
ErrorCorrectingPair<Rational>* Kummer33::pair = nullptr;

}  // namespace

TEST_F(Kummer33, ConstructionParameters) {
  EXPECT_EQ(pair->t, 2u);
  EXPECT_TRUE(pair_violations(*pair).empty());
  EXPECT_TRUE(pair->verified());
  EXPECT_EQ(pair->a.dim(), 3u);
  EXPECT_EQ(pair->b.dim(), 3u);
  EXPECT_EQ(pair->c, th->rm_code(1).compose_right(th->theta_minus_one()));
  ASSERT_TRUE(pair->d_c);
  EXPECT_EQ(pair->d_c->value, 6u);
  EXPECT_EQ(pair->d_c->source, Provenance::closed_form);
}

TEST_F(Kummer33, ProductInsideDualOfC) {
  EXPECT_TRUE(pair->c.dual().contains(product_code(pair->b, pair->a)));
}

TEST_F(Kummer33, ComputeKOfZeroIsA) {
  EXPECT_EQ(compute_K(alg->zero(), pair->a, pair->b), k_expansion(pair->a));
}

TEST_F(Kummer33, DecodeCodewordAndRankTwoErrors) {
  Rng rng(21);
  auto c = random_codeword(rng);
  auto res = decode(*pair, c);
  ASSERT_TRUE(res.ok());
  EXPECT_EQ(*res.codeword, c);
  auto rep = ecp_roundtrip(*pair, 2, 3, 99);
  EXPECT_EQ(rep.successes, 3u);
  EXPECT_EQ(rep.miscorrected, 0u);
}

TEST_F(Kummer33, BeyondRadiusOnlyReturnsNearbyCodewords) {
  for (std::uint64_t s = 0; s < 2; ++s) {
    Rng rng(Rng::split(5, s));
    auto c = random_codeword(rng);
    auto r = c + random_rank_error(*alg, 3, Rng::split(6, s));
    auto res = decode(*pair, r);
    if (res.ok()) {
      EXPECT_TRUE(pair->c.contains(*res.codeword));
      EXPECT_LE(alg->rank_fast(r - *res.codeword), 3u);
    } else {
      EXPECT_FALSE(res.failure.empty());
    }
  }
}

TEST_F(Kummer33, PropertyChecks) {
  auto rep = ecp_property_checks(*pair, 2, 2, 13);
  EXPECT_TRUE(rep.k_translation);
  EXPECT_TRUE(rep.adjunction);
  EXPECT_TRUE(rep.shortening);
}

TEST_F(Kummer33, InvalidParametersRejected) {
  EXPECT_THROW(rm_ecp_construct(*th, 2, 1, 0), DomainError);
  for (std::size_t r = 3; r <= 4; ++r)
    for (std::size_t a = 1; a <= 2; ++a) EXPECT_THROW(rm_ecp_construct(*th, r, a, 0), DomainError);
  EXPECT_THROW(rm_ecp_construct(*th, 1, 2, 1), DomainError);
  EXPECT_EQ(rm_ecp_construct(*th, 1, 0, 0).t, 0u);
}

TEST(Ecp, BrokenPairIsReported) {
  auto e = kummer23();
  GroupAlgebra<Rational> alg(e);
  ThetaAlgebra<Rational> th(alg);
  auto pair = rm_ecp_construct(th, 0, 1, 1);
  EXPECT_TRUE(pair_violations(pair).empty());
  pair.a = Code<Rational>::full(alg);
  EXPECT_FALSE(pair_violations(pair).empty());
}

TEST(Ecp, RoundtripOnType23) {
  auto e = kummer23();
  GroupAlgebra<Rational> alg(e);
  ThetaAlgebra<Rational> th(alg);
  auto pair = rm_ecp_construct(th, 0, 1, 1);
  EXPECT_EQ(pair.t, 2u);
  auto rep = ecp_roundtrip(pair, pair.t, 10, 4);
  EXPECT_EQ(rep.successes, 10u);
  auto zero = ecp_roundtrip(pair, 0, 3, 4);
  EXPECT_EQ(zero.successes, 3u);
}

TEST(Ecp, GabidulinLikePairOverF16) {
  auto e = finite(2, 4);
  GroupAlgebra<ModP> alg(e);
  ThetaAlgebra<ModP> th(alg);
  auto pair = rm_ecp_construct(th, 0, 1, 1);
  EXPECT_EQ(pair.t, 1u);
  EXPECT_TRUE(pair_violations(pair).empty());
  EXPECT_EQ(ecp_roundtrip(pair, 1, 10, 1).successes, 10u);
}

TEST(Tmax, SearchAndClosedForm) {
  auto t44 = t_max_search(1, {4, 4});
  EXPECT_EQ(t44.t_exhaustive, 3u);
  EXPECT_EQ(t44.a, 2u);
  EXPECT_EQ(t44.b, 2u);
  ASSERT_TRUE(t44.t_closed_form);
  EXPECT_EQ(*t44.t_closed_form, 2u);
  EXPECT_TRUE(t44.discrepancy());
  auto t33 = t_max_search(1, {3, 3});
  EXPECT_EQ(t33.t_exhaustive, 2u);
  EXPECT_EQ(t33.a, 1u);
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t r = n - 1; r + 1 <= 2 * n - 2; ++r) EXPECT_EQ(t_max_search(r, {n, n}).t_exhaustive, 0u);
}

TEST(Radii, Endpoints) {
  EXPECT_DOUBLE_EQ(unique_radius(0), 0.5);
  EXPECT_NEAR(ecp_radius(0), 2 - std::sqrt(3.0), 1e-15);
  EXPECT_DOUBLE_EQ(unique_radius(1), 0);
  EXPECT_NEAR(ecp_radius(1), 0, 1e-15);
  for (double g = 0; g <= 1; g += 0.125) EXPECT_LE(ecp_radius(g), unique_radius(g) + 1e-15);
}

TEST(RandomRankError, RankAndSupport) {
  auto e = kummer3();
  GroupAlgebra<Rational> alg(e);
  for (std::uint64_t s = 0; s < 100; ++s)
    for (std::size_t t = 1; t <= 3; ++t) ASSERT_EQ(alg.rank_of(random_rank_error(alg, t, s)), t);
  EXPECT_THROW(random_rank_error(alg, 0, 1), DomainError);
  EXPECT_THROW(random_rank_error(alg, 4, 1), DomainError);
  EXPECT_EQ(alg.support(random_rank_error(alg, 1, 5)).dim(), 1u);
  EXPECT_EQ(random_rank_error(alg, 2, 8), random_rank_error(alg, 2, 8));
}
