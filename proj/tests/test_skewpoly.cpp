// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

using namespace lgtest;

namespace {

struct Skew33 : ::testing::Test {
  Skew33() : ext(kummer33()), alg(ext), ring(ThetaAlgebra<Rational>(alg)) {}
  QExt ext;
  GroupAlgebra<Rational> alg;
  SkewRing<Rational> ring;
  MultiIndex mi(std::size_t a, std::size_t b) const { return {a, b}; }
};

}  // namespace

TEST_F(Skew33, CommutationRule) {
  Rng rng(1);
  auto a = alg.random_scalar(rng, 3);
  const std::size_t t1 = ring.theta().group_index(mi(1, 0));
  EXPECT_EQ(ring.mul(ring.x(0), ring.constant(a)), ring.monomial(ext->apply(t1, a), mi(1, 0)));
  auto f = ring.random(rng, 4, 5, 2);
  EXPECT_EQ(ring.mul(ring.constant(ext->L().one()), f), f);
  auto x1x2 = ring.mul(ring.x(0), ring.x(1)), x2x1 = ring.mul(ring.x(1), ring.x(0));
  EXPECT_EQ(x1x2, x2x1);
  EXPECT_EQ(ring.mul(x1x2, x2x1), ring.monomial(ext->L().one(), mi(2, 2)));
}

TEST_F(Skew33, Reduction) {
  const auto one = ext->L().one();
  EXPECT_EQ(ring.reduce(ring.monomial(one, mi(3, 0))), ring.constant(one));
  Rng rng(2);
  auto a = alg.random_scalar(rng, 3);
  EXPECT_EQ(ring.reduce(ring.monomial(a, mi(5, 0))), ring.monomial(a, mi(2, 0)));
  auto f = ring.reduce(ring.random(rng, 5, 7, 2));
  EXPECT_TRUE(ring.is_reduced(f));
  EXPECT_EQ(ring.reduce(f), f);
  // x^3 - 1 cancels to zero
  EXPECT_TRUE(ring.reduce(ring.sub(ring.monomial(one, mi(0, 3)), ring.constant(one))).empty());
}

TEST_F(Skew33, PhiIsARingMap) {
  EXPECT_EQ(ring.phi(ring.x(0)), ring.theta().theta(0));
  EXPECT_EQ(ring.phi(ring.x(1)), ring.theta().theta(1));
  EXPECT_EQ(ring.phi(ring.monomial(ext->L().one(), mi(0, 3))), alg.identity());
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto f = ring.random(rng, 3, 5, 2), g = ring.random(rng, 3, 5, 2);
    ASSERT_EQ(ring.phi(ring.mul(f, g)), alg.compose(ring.phi(f), ring.phi(g)));
    ASSERT_EQ(ring.phi(ring.add(f, g)), ring.phi(f) + ring.phi(g));
  }
  auto p = alg.random_element(rng, 2);
  EXPECT_EQ(ring.phi(ring.phi_inv(p)), p);
}

TEST_F(Skew33, LeadingTerms) {
  const auto one = ext->L().one();
  auto f = ring.add(ring.x(0), ring.monomial(one, mi(0, 2)));
  EXPECT_EQ(ring.leading_term(f, MonomialOrder::grevlex).first, mi(0, 2));
  EXPECT_EQ(ring.leading_term(f, MonomialOrder::grlex).first, mi(0, 2));
  EXPECT_THROW(ring.leading_term({}, MonomialOrder::grevlex), DomainError);
}

TEST_F(Skew33, WitnessForConstant) {
  auto rep = ring.af_witness_check(alg.identity(), MonomialOrder::grevlex);
  EXPECT_EQ(rep.z_size, 9u);
  EXPECT_EQ(rep.failures, 0u);
  EXPECT_EQ(rep.product_rank, 9u);
  EXPECT_TRUE(rep.ok());
}

TEST_F(Skew33, WitnessForRandomPolynomials) {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    auto p = ring.theta().random_polynomial(rng, 2);
    for (auto o : {MonomialOrder::grevlex, MonomialOrder::grlex}) {
      auto rep = ring.af_witness_check(p, o);
      EXPECT_TRUE(rep.ok());
      std::size_t prod = 1;
      for (std::size_t k = 0; k < 2; ++k) prod *= 3 - rep.lead[k];
      EXPECT_EQ(rep.z_size, prod);
      EXPECT_GE(alg.rank_of(p), rep.z_size);
    }
  }
}

TEST_F(Skew33, TextForm) {
  const auto one = ext->L().one();
  EXPECT_EQ(ring.to_text({}), "0");
  EXPECT_EQ(ring.to_text(ring.monomial(one, mi(2, 1))), "(1) * x1^2 x2");
}
