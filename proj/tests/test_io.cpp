// SPDX-License-Identifier: Apache-2.0
#include "lgrank/io.hpp"
#include "support.hpp"

using namespace lgtest;

#ifndef LGRANK_FIXTURES
#define LGRANK_FIXTURES "fixtures"
#endif

TEST(Json, ElementRoundTrip) {
  auto e = kummer33();
  GroupAlgebra<Rational> alg(e);
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    auto x = alg.random_scalar(rng, 3) * Rational(1, 7);
    auto j = element_to_json(x);
    EXPECT_EQ(element_from_json(e->L(), Json::parse(j.dump())), x);
  }
  auto q = q_zeta3();
  auto j = element_to_json(az(*q, 1, -1) * Rational(1, 3));
  EXPECT_EQ(j.dump(), R"(["1/3","-1/3"])");
  auto f = finite(3, 3);
  auto y = f->L().variable(0) + f->L().from_int(2);
  EXPECT_EQ(element_from_json(f->L(), element_to_json(y)), y);
  EXPECT_THROW(element_from_json(q->L(), Json::parse(R"(["1"])")), DomainError);
}

TEST(Json, MatrixAndCsvRoundTrip) {
  auto e = kummer3();
  GroupAlgebra<Rational> alg(e);
  Rng rng(2);
  auto m = alg.dickson_matrix(alg.random_element(rng, 3));
  EXPECT_EQ(matrix_from_json(e->L(), Json::parse(matrix_to_json(m).dump())), m);
  const std::string csv = matrix_to_csv(m);
  EXPECT_EQ(matrix_from_csv(e->L(), csv), m);
  EXPECT_EQ(matrix_to_csv(matrix_from_csv(e->L(), csv)), csv);
}

TEST(Csv, QuotingRules) {
  EXPECT_EQ(csv_quote("1/2"), "1/2");
  EXPECT_EQ(csv_quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_quote("say \"x\""), "\"say \"\"x\"\"\"");
  auto rows = csv_parse("a,\"b,c\",\"d\"\"e\"\r\n1,,3\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][1], "b,c");
  EXPECT_EQ(rows[0][2], "d\"e");
  EXPECT_EQ(rows[1][1], "");
  EXPECT_THROW(csv_parse("\"open"), DomainError);
}

TEST(Json, GroupAlgebraElementsCarryFieldHash) {
  auto e = kummer3();
  GroupAlgebra<Rational> alg(e);
  Rng rng(3);
  auto a = alg.random_element(rng, 3);
  auto j = lg_to_json(*e, a);
  EXPECT_EQ(lg_from_json(*e, j), a);
  auto other = tower(3, {{3, Rational(5)}});
  EXPECT_THROW(lg_from_json(*other, j), DomainError);
}

TEST(Json, CodeRoundTrip) {
  auto e = kummer23();
  GroupAlgebra<Rational> alg(e);
  ThetaAlgebra<Rational> th(alg);
  auto c = th.rm_code(2);
  RmMetadata meta{{2, 3}, 2, ""};
  auto j = code_to_json(c, &meta);
  EXPECT_EQ(j["rm"]["r"], 2);
  EXPECT_EQ(code_from_json(alg, Json::parse(j.dump())), c);
}

TEST(Json, SkewPolynomialRoundTrip) {
  auto e = kummer33();
  GroupAlgebra<Rational> alg(e);
  SkewRing<Rational> ring{ThetaAlgebra<Rational>(alg)};
  Rng rng(4);
  auto f = ring.random(rng, 5, 4, 3);
  EXPECT_EQ(skew_from_json(e->L(), Json::parse(skew_to_json(f).dump())), f);
}

TEST(Fixtures, DescriptorsLoad) {
  const std::string dir = LGRANK_FIXTURES;
  struct Want {
    const char* file;
    std::size_t degree;
    bool abelian;
  };
  for (const auto& w : {Want{"s3_p2.field", 6, false}, Want{"kummer_3.field", 3, true}, Want{"kummer_3_3.field", 9, true},
                        Want{"kummer_6_2_3.field", 6, true}, Want{"biquadratic.field", 4, true}}) {
    auto e = Extension<Rational>::create(FieldSpec::load(dir + "/" + w.file));
    EXPECT_EQ(e->degree(), w.degree) << w.file;
    EXPECT_EQ(e->is_abelian(), w.abelian) << w.file;
  }
  EXPECT_EQ(Extension<ModP>::create(FieldSpec::load(dir + "/f16.field"))->degree(), 4u);
  EXPECT_EQ(Extension<ModP>::create(FieldSpec::load(dir + "/f27.field"))->degree(), 3u);
  EXPECT_THROW(FieldSpec::load(dir + "/missing.field"), DomainError);
}
