// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gtest/gtest.h>

#include "lgrank/verify.hpp"

namespace lgtest {

using namespace lgrank;
using QExt = std::shared_ptr<const Extension<Rational>>;
using FExt = std::shared_ptr<const Extension<ModP>>;

inline QExt tower(long e, std::vector<Radical> r, FieldSpec::Base base = FieldSpec::Base::cyclotomic) {
  return Extension<Rational>::create(FieldSpec::tower(e, std::move(r), base));
}
inline QExt q_zeta3() { return tower(3, {}, FieldSpec::Base::rational); }
inline QExt kummer3() { return tower(3, {{3, Rational(2)}}); }
inline QExt kummer33() { return tower(3, {{3, Rational(2)}, {3, Rational(3)}}); }
inline QExt kummer23() { return tower(6, {{2, Rational(2)}, {3, Rational(3)}}); }
inline QExt biquadratic() { return tower(2, {{2, Rational(2)}, {2, Rational(3)}}, FieldSpec::Base::rational); }
inline QExt s3(long p) { return tower(3, {{3, Rational(p)}}, FieldSpec::Base::rational); }
inline FExt finite(std::uint32_t p, std::size_t n) { return Extension<ModP>::create(FieldSpec::finite_field(p, n)); }

// a + b zeta in a tower
template <class S>
FieldElement<S> az(const Extension<S>& e, long a, long b) {
  return e.L().from_int(a) + e.L().from_int(b) * e.zeta();
}

}  // namespace lgtest
