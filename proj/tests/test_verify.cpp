// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

using namespace lgtest;

namespace {

template <class S>
void expect_all_pass(const std::vector<CheckResult>& res) {
  ASSERT_FALSE(res.empty());
  for (const auto& r : res)
    EXPECT_TRUE(r.ok()) << r.suite << ": " << r.name << " " << r.passed << "/" << r.total << " " << r.note;
}

bool has_check(const std::vector<CheckResult>& res, const std::string& needle) {
  for (const auto& r : res)
    if (r.name.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Suites, AllPassOnSmallFields) {
  expect_all_pass<Rational>(run_suite<Rational>("all", kummer3(), {42, 6}));
  expect_all_pass<Rational>(run_suite<Rational>("all", biquadratic(), {42, 6}));
  expect_all_pass<ModP>(run_suite<ModP>("all", finite(2, 4), {42, 6}));
  expect_all_pass<ModP>(run_suite<ModP>("all", finite(3, 3), {42, 6}));
}

TEST(Suites, DicksonSuiteContents) {
  auto res = run_suite<Rational>("dickson", s3(2), {1, 4});
  expect_all_pass<Rational>(res);
  EXPECT_TRUE(has_check(res, "rank characterization"));
  EXPECT_TRUE(has_check(res, "transpose law"));
}

TEST(Suites, NonAbelianFields) {
  auto e = s3(2);
  EXPECT_THROW(run_suite<Rational>("rm", e, {}), DomainError);
  EXPECT_THROW(run_suite<Rational>("ecp", e, {}), DomainError);
  EXPECT_THROW(run_suite<Rational>("skew", e, {}), DomainError);
  auto res = run_suite<Rational>("all", e, {7, 4});
  std::size_t skipped = 0;
  for (const auto& r : res) {
    if (r.skipped()) ++skipped;
    else EXPECT_TRUE(r.ok()) << r.name;
  }
  EXPECT_GE(skipped, 3u);
}

TEST(Suites, UnknownName) { EXPECT_THROW(run_suite<Rational>("nope", kummer3(), {}), DomainError); }

TEST(Suites, Deterministic) {
  auto a = run_suite<Rational>("algebra", kummer23(), {5, 4});
  auto b = run_suite<Rational>("algebra", kummer23(), {5, 4});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].passed, b[i].passed);
  }
}
