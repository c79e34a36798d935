// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lgrank/ecp.hpp"
#include "lgrank/skewpoly.hpp"

namespace lgrank {

struct CheckResult {
  std::string suite;
  std::string name;
  std::size_t passed{0};
  std::size_t total{0};
  std::string note;  // "skipped: ..." or a failure detail
  bool skipped() const { return total == 0; }
  bool ok() const { return passed == total; }
};

struct SuiteOptions {
  std::uint64_t seed{42};
  std::size_t trials{20};
};

const std::vector<std::string>& suite_names();  // algebra, dickson, duality, ecp, rm, skew

// Runs one suite ("all" runs every suite that applies to the field, marking
// the rest as skipped). Unknown names and, for rm/ecp/skew, non-abelian
// groups raise DomainError.
template <class S>
std::vector<CheckResult> run_suite(const std::string& name, std::shared_ptr<const Extension<S>> ext,
                                   const SuiteOptions& opt);

// Random K-basis of L.
template <class S>
Basis<S> random_basis(const Extension<S>& ext, Rng& rng, long height = 2);

}  // namespace lgrank
