#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncg/algebra.hpp"

namespace ncg {

struct TheoremResult {
  std::string name;
  bool passed;
  double max_error;  // worst observed error (relative unless stated by the check)
  double tolerance;
  std::size_t cases;
};

/// Randomised verification of the derivative identities on one algebra.
/// Suites: "monomial", "leibniz", "chain", "taylor".
std::vector<TheoremResult> run_check_suite(const std::string& suite, const Algebra& algebra,
                                           std::uint64_t seed);

const std::vector<std::string>& check_suite_names();

}  // namespace ncg
