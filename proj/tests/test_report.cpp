#include <doctest.h>

#include <json.hpp>

#include "support.hpp"
#include "z2z4q8/fixtures.hpp"
#include "z2z4q8/report.hpp"

using namespace testing;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> keys(const ordered_json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("json report keys and order") {
  const auto rep = analyze(fixture_group("q8x4_hadamard_rank7"));
  const auto j = ordered_json::parse(to_json(rep));
  CHECK(keys(j) == std::vector<std::string>{"signature", "order", "type", "rank", "kernel_dim", "is_linear",
                                            "is_abelian", "is_hadamard", "shape", "epsilon", "weight_distribution",
                                            "bounds", "normalized_generators"});
  CHECK(keys(j["signature"]) == std::vector<std::string>{"k1", "k2", "k3", "n", "l"});
  CHECK(j["signature"]["k3"] == 4);
  CHECK(j["signature"]["n"] == 16);
  CHECK(j["order"] == 32);
  CHECK(j["type"] == json::array({2, 0, 3}));
  CHECK(j["rank"] == 7);
  CHECK(j["is_hadamard"] == true);
  CHECK(j["shape"] == 2);
  CHECK(j["weight_distribution"] ==
        ordered_json::array({{{"weight", 0}, {"count", 1}}, {{"weight", 8}, {"count", 30}}, {{"weight", 16}, {"count", 1}}}));
  for (const auto& b : j["bounds"]) {
    CHECK(keys(b).size() >= 4);
    CHECK(b["ok"] == true);
  }
  CHECK(keys(j["normalized_generators"]) == std::vector<std::string>{"x", "y", "z"});
  CHECK(j["normalized_generators"]["z"].size() == 3);
  CHECK(j["normalized_generators"]["x"][0].is_string());
}

TEST_CASE("json report for a non-hadamard code") {
  const auto c = group(GroupSignature(0, 0, 2), {"a a", "ab b"});
  const auto j = ordered_json::parse(to_json(analyze(c)));
  CHECK(j["is_hadamard"] == false);
  CHECK(j["shape"].is_null());
  CHECK(j["epsilon"].is_null());
  CHECK(j["normalized_generators"].is_null());
  CHECK(j["type"] == json::array({1, 0, 2}));
  CHECK(j["kernel_dim"] == 1);
  CHECK(j["rank"] == 4);
}

TEST_CASE("json output is stable across runs and policies") {
  const auto c = fixture_group("q8x8_hadamard_shape5");
  CheckOptions serial;
  serial.exec = Exec::Serial;
  CHECK(to_json(analyze(c)) == to_json(analyze(c, serial)));
}

TEST_CASE("text report mentions the invariants") {
  const auto text = to_text(analyze(fixture_group("q8x4_hadamard_rank7")));
  CHECK(text.find("rank") != std::string::npos);
  CHECK(text.find("(2,0,3)") != std::string::npos);
}
