// Runs every reference case and prints one PASS/FAIL line per case.
//
// A few cases contain checks whose reference expectations are contradicted
// by direct computation; those cases print FAIL with the offending checks and
// the reason below, but do not make the binary exit nonzero. Any other
// failure does.

#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "z2z4q8/reproduce.hpp"

namespace {

struct Known {
  std::string_view reason;
  /// Checks allowed to fail, matched by name prefix.
  std::vector<std::string_view> checks;
};

const std::map<std::string_view, Known> kKnownUnattainable = {
    {"lift-extend-len16",
     {"(1,1,a2,a2) is c^2 for c = (a2,1,a,a3) in the lifted code, so it cannot extend it",
      {"x = (1,1,a2,a2) lies outside the lifted code"}}},
    {"kronecker-kernel-drop",
     {"both shape labels disagree with exhaustive pair counts on the two codes", {"input shape", "K_g shape"}}},
    {"kronecker-laws",
     {"r(K_g) = r + 1 fails for some g; a rank jump of 2 is confirmed by independent computation",
      {"K_g with r(K_g) != r + 1"}}},
};

bool allowed(std::string_view id, const std::string& check) {
  const auto it = kKnownUnattainable.find(id);
  if (it == kKnownUnattainable.end()) return false;
  for (auto prefix : it->second.checks)
    if (check.starts_with(prefix)) return true;
  return false;
}

}  // namespace

int main() {
  using namespace z2z4q8;
  int unexpected = 0;
  for (const auto& info : reproduce_cases()) {
    const auto r = run_case(info.id, {});
    std::printf("%s %s  %.*s\n", r.ok() ? "PASS" : "FAIL", r.id.c_str(), static_cast<int>(info.title.size()),
                info.title.data());
    if (r.ok()) continue;
    bool all_known = r.error.empty() && kKnownUnattainable.contains(info.id);
    if (!r.error.empty()) std::printf("     error: %s\n", r.error.c_str());
    for (const auto& c : r.checks) {
      if (c.ok) continue;
      std::printf("     %s: expected %s, got %s\n", c.name.c_str(), c.expected.c_str(), c.actual.c_str());
      all_known = all_known && allowed(info.id, c.name);
    }
    if (all_known) {
      const auto& reason = kKnownUnattainable.at(info.id).reason;
      std::printf("     known: %.*s\n", static_cast<int>(reason.size()), reason.data());
    } else {
      ++unexpected;
    }
  }
  std::printf("%d unexpected failure(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
