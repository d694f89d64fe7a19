#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "z2z4q8/fixtures.hpp"

using namespace testing;

TEST_CASE("every fixture file is embedded and parses") {
  std::size_t on_disk = 0;
  for (const auto& entry : std::filesystem::directory_iterator(Z2Z4Q8_FIXTURE_DIR)) {
    if (entry.path().extension() != ".gens") continue;
    ++on_disk;
    const auto name = entry.path().stem().string();
    CAPTURE(name);
    std::ifstream in(entry.path());
    std::stringstream text;
    text << in.rdbuf();
    const auto parsed = parse_generators(text.str());
    CHECK(read_generator_file(entry.path().string()) == parsed);
    CHECK(fixture_file(name) == parsed);
    CHECK(fixture_group(name).order() >= 2);
  }
  CHECK(on_disk == fixtures().size());
  CHECK_THROWS_AS(fixture_file("no_such_fixture"), std::out_of_range);
}

TEST_CASE("fixture orders") {
  CHECK(fixture_group("quaternion_pair_nonlinear").order() == 8);
  CHECK(fixture_group("q8x4_hadamard_rank7").order() == 32);
  CHECK(fixture_group("q8x8_hadamard_shape5").order() == 64);
  CHECK(fixture_group("q8x8_hadamard_kernel4").order() == 64);
  CHECK(fixture_group("z2x8_z4x12_hadamard_kernel4").order() == 64);
  CHECK_THROWS_AS(fixture_group("q8x8_hadamard_shape5", 16), OrderOverflow);
}
