#pragma once

#include <string_view>
#include <vector>

#include "z2z4q8/io.hpp"
#include "z2z4q8/subgroup.hpp"

namespace z2z4q8 {

/// Generator files shipped under fixtures/, compiled into the library.
struct Fixture {
  std::string_view name;  ///< file name without ".gens"
  std::string_view text;
};

[[nodiscard]] const std::vector<Fixture>& fixtures();
/// Throws std::out_of_range for an unknown name.
[[nodiscard]] GeneratorFile fixture_file(std::string_view name);
[[nodiscard]] CodeGroup fixture_group(std::string_view name, std::size_t max_order = kDefaultMaxOrder);

}  // namespace z2z4q8
