// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

using namespace lgtest;

TEST(FieldArithmetic, CyclotomicIdentities) {
  auto e = q_zeta3();
  const auto z = e->zeta();
  EXPECT_EQ((e->L().one() + z) * (e->L().one() + z), z);
  EXPECT_EQ(z.inverse(), az(*e, -1, -1));
  EXPECT_EQ(z.pow(3), e->L().one());
}

TEST(FieldArithmetic, F4DefiningRelation) {
  auto e = finite(2, 2);
  const auto w = e->L().variable(0);
  EXPECT_EQ(w * w, w + e->L().one());
  EXPECT_EQ(w * w * w, e->L().one());
}

TEST(FieldArithmetic, DivisionByZeroThrows) {
  auto e = kummer3();
  EXPECT_THROW(e->L().zero().inverse(), Error);
}

TEST(FieldArithmetic, RandomInverses) {
  auto e = kummer33();
  GroupAlgebra<Rational> alg(e);
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    auto x = alg.random_scalar(rng, 3);
    if (x.is_zero()) continue;
    EXPECT_TRUE((x * x.inverse()).is_one());
  }
}

TEST(Automorphisms, ThetaOnCubeRoot) {
  auto e = kummer3();
  auto g = e->find({1, 1});
  ASSERT_TRUE(g);
  EXPECT_EQ(e->apply(*g, e->radical(0)), e->zeta() * e->radical(0));
  EXPECT_EQ(e->apply(e->identity(), e->radical(0)), e->radical(0));
}

TEST(Automorphisms, FrobeniusOnF4) {
  auto e = finite(2, 2);
  const auto w = e->L().variable(0);
  auto g = e->find({1});
  ASSERT_TRUE(g);
  EXPECT_EQ(e->apply(*g, w), w + e->L().one());
}

TEST(Automorphisms, CompositionTableIsConsistent) {
  for (auto e : {s3(2), kummer23()}) {
    GroupAlgebra<Rational> alg(e);
    Rng rng(9);
    auto x = alg.random_scalar(rng, 2), y = alg.random_scalar(rng, 2);
    for (std::size_t g = 0; g < e->degree(); ++g)
      for (std::size_t h = 0; h < e->degree(); ++h) {
        EXPECT_EQ(e->apply(e->compose(g, h), x), e->apply(g, e->apply(h, x)));
        EXPECT_EQ(e->apply(g, x * y), e->apply(g, x) * e->apply(g, y));
      }
    for (std::size_t g = 0; g < e->degree(); ++g) EXPECT_EQ(e->compose(g, e->inverse(g)), e->identity());
  }
}

TEST(Automorphisms, S3IsNotAbelian) {
  EXPECT_FALSE(s3(2)->is_abelian());
  EXPECT_TRUE(kummer33()->is_abelian());
  EXPECT_EQ(s3(2)->degree(), 6u);
  EXPECT_EQ(kummer23()->degree(), 6u);
  EXPECT_EQ(tower(6, {{2, Rational(2)}, {3, Rational(3)}}, FieldSpec::Base::rational)->degree(), 12u);
}

TEST(Trace, SmallExamples) {
  auto q = q_zeta3();
  EXPECT_EQ(q->trace(q->zeta()), q->L().from_int(-1));
  EXPECT_EQ(q->trace(q->L().one()), q->L().from_int(2));
  auto f = finite(2, 2);
  EXPECT_EQ(f->trace(f->L().variable(0)), f->L().one());
}

TEST(Trace, LiesInBaseAndIsInvariant) {
  auto e = kummer23();
  GroupAlgebra<Rational> alg(e);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    auto x = alg.random_scalar(rng, 3);
    auto t = e->trace(x);
    EXPECT_TRUE(e->L().in_base(t));
    for (std::size_t g = 0; g < e->degree(); ++g) EXPECT_EQ(e->trace(e->apply(g, x)), t);
  }
}

TEST(DualBasis, QZeta3) {
  auto e = q_zeta3();
  auto b = e->make_basis({e->L().one(), e->zeta()});
  auto d = e->dual_basis(b);
  const Rational third(1, 3);
  EXPECT_EQ(d[0], az(*e, 1, -1) * third);
  EXPECT_EQ(d[1], az(*e, -1, -2) * third);
  EXPECT_EQ(e->dual_basis(d), b);
}

TEST(DualBasis, F4) {
  auto e = finite(2, 2);
  const auto w = e->L().variable(0);
  auto b = e->make_basis({w, w * w});
  auto d = e->dual_basis(b);
  // Tr(w w) = 1 and Tr(w w^2) = 0: the basis is self-dual
  EXPECT_EQ(d[0], w);
  EXPECT_EQ(d[1], w * w);
}

TEST(DualBasis, RandomBasesAreBiorthogonal) {
  auto e = finite(3, 3);
  Rng rng(11);
  for (int i = 0; i < 5; ++i) {
    auto b = random_basis(*e, rng);
    auto d = e->dual_basis(b);
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = 0; q < 3; ++q)
        EXPECT_EQ(e->trace_K(b[p] * d[q]), p == q ? e->K().one() : e->K().zero());
    EXPECT_EQ(e->dual_basis(d), b);
  }
}

TEST(NormalElement, IsNormalAndNotOne) {
  for (auto e : {q_zeta3(), kummer3(), s3(2), biquadratic()}) {
    GroupAlgebra<Rational> alg(e);
    auto a = e->normal_element();
    EXPECT_NE(a, e->L().one());
    std::vector<FieldElement<Rational>> orbit;
    for (std::size_t g = 0; g < e->degree(); ++g) orbit.push_back(e->apply(g, a));
    EXPECT_EQ(rank(alg.moore_matrix(orbit)), e->degree());
  }
  auto f = finite(2, 2);
  GroupAlgebra<ModP> alg(f);
  auto a = f->normal_element();
  EXPECT_EQ(rank(alg.moore_matrix({a, f->apply(1, a)})), 2u);
}

TEST(FixedField, KummerSubfields) {
  auto e = kummer33();
  auto b = e->fixed_field_basis(0);
  ASSERT_EQ(b.size(), 3u);
  auto a = e->radical(0);
  EXPECT_EQ(b[0], e->L().one());
  EXPECT_EQ(b[1], a);
  EXPECT_EQ(b[2], a * a);
  const auto* ab = e->abelian();
  ASSERT_NE(ab, nullptr);
  for (std::size_t i = 0; i < 2; ++i)
    for (const auto& v : e->fixed_field_basis(i))
      for (std::size_t j = 0; j < 2; ++j)
        if (j != i) EXPECT_EQ(e->apply(ab->generators[j], v), v);
}

TEST(FieldSpec, ParseAndCanonicalText) {
  auto s = FieldSpec::parse("# comment\nformat = lgrank-field/1\nbackend = tower\nroot_of_unity = 3\nbase = cyclotomic\nradicals = 3:2, 3:3\n");
  EXPECT_EQ(s.radicals.size(), 2u);
  EXPECT_EQ(FieldSpec::parse(s.canonical_text()).canonical_text(), s.canonical_text());
  EXPECT_EQ(s.hash(), FieldSpec::tower(3, {{3, Rational(2)}, {3, Rational(3)}}).hash());
  EXPECT_THROW(FieldSpec::parse("format = lgrank-field/1\nbackend = tower\nroot_of_unity = 3\nradicals = 4:2\n"), Error);
  EXPECT_THROW(FieldSpec::parse("format = lgrank-field/2\nbackend = finite\np = 2\ndegree = 2\n"), Error);
  EXPECT_THROW(FieldSpec::parse("format = lgrank-field/1\nbackend = finite\np = 4\ndegree = 2\n"), Error);
}

TEST(FieldSpec, DependentRadicandsRejected) {
  EXPECT_THROW(tower(3, {{3, Rational(2)}, {3, Rational(2)}}), Error);
  EXPECT_THROW(tower(3, {{3, Rational(2)}, {3, Rational(4)}}), Error);
  EXPECT_THROW(tower(2, {{2, Rational(4)}}, FieldSpec::Base::rational), Error);
}

TEST(FieldSpec, ReducibleFinitePolynomialRejected) {
  EXPECT_THROW(Extension<ModP>::create(FieldSpec::finite_field(2, 2, {1, 0, 1})), Error);
  EXPECT_NO_THROW(Extension<ModP>::create(FieldSpec::finite_field(2, 2, {1, 1, 1})));
}
