#pragma once

#include <optional>
#include <string>

#include "z2z4q8/hadamard.hpp"
#include "z2z4q8/invariants.hpp"
#include "z2z4q8/subgroup.hpp"

namespace z2z4q8 {

struct AnalysisReport {
  StructureReport structure;
  bool is_hadamard = false;
  std::optional<Shape> shape;
  std::optional<NormalizedGenSet> normalized;
  BoundReport bounds;
};

/// Structure, Hadamard test, shape and every applicable bound.
[[nodiscard]] AnalysisReport analyze(const CodeGroup& c, const CheckOptions& opt = {});

/// Fixed key order; absent parts are null.
[[nodiscard]] std::string to_json(const AnalysisReport& r, int indent = 2);
[[nodiscard]] std::string to_text(const AnalysisReport& r);

}  // namespace z2z4q8
