#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "z2z4q8/invariants.hpp"

namespace z2z4q8 {

struct CaseCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct CaseResult {
  std::string id;
  std::string title;
  std::vector<CaseCheck> checks;
  /// Set when the case threw before finishing.
  std::string error;

  [[nodiscard]] bool ok() const {
    if (!error.empty() || checks.empty()) return false;
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

struct ReproduceOptions {
  CheckOptions check;
  std::uint64_t seed = 1;
  std::size_t property_samples = 500;
  std::size_t hadamard_samples = 200;
  std::size_t kronecker_samples = 200;
  std::size_t search_budget = 2000;
  std::size_t random_swapper_words = 10000;
};

struct CaseInfo {
  std::string_view id;
  std::string_view title;
};

[[nodiscard]] const std::vector<CaseInfo>& reproduce_cases();
/// Throws std::out_of_range for an unknown id.
[[nodiscard]] CaseResult run_case(std::string_view id, const ReproduceOptions& opt = {});

}  // namespace z2z4q8
