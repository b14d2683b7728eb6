#pragma once

#include <bvl/catalog/catalog.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bvl::testing {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> failing_groups;
};

SuiteResult algebra_laws(const std::vector<CatalogGroup>& groups);
/// sigma against brute-force power classes on every generating pair, plus
/// literal sigma_brute calls on a sample.
SuiteResult sigma_oracle(const std::vector<CatalogGroup>& groups);
SuiteResult sigma_invariance(const std::vector<CatalogGroup>& groups);
SuiteResult generation_cross_check(const std::vector<CatalogGroup>& groups);
SuiteResult search_certify_consistency(const std::vector<CatalogGroup>& groups);

std::vector<SuiteResult> all_property_suites(const std::vector<CatalogGroup>& groups);

}  // namespace bvl::testing
