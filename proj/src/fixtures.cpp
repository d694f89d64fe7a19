#include "z2z4q8/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace z2z4q8 {

namespace detail {
extern const std::vector<Fixture> kFixtures;
}

const std::vector<Fixture>& fixtures() { return detail::kFixtures; }

GeneratorFile fixture_file(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return parse_generators(f.text);
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

CodeGroup fixture_group(std::string_view name, std::size_t max_order) {
  const auto f = fixture_file(name);
  return enumerate(f.signature, f.generators, max_order);
}

}  // namespace z2z4q8
