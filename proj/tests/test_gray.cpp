#include <doctest.h>

#include <map>
#include <string>

#include "support.hpp"
#include "z2z4q8/gray.hpp"
#include "z2z4q8/sampling.hpp"

using namespace testing;

namespace {

const std::map<std::string, std::string> kQ8Gray = {
    {"1", "0000"}, {"a", "0101"}, {"a2", "1111"}, {"a3", "1010"},
    {"b", "0110"}, {"ab", "1100"}, {"a2b", "1001"}, {"a3b", "0011"},
};
const std::map<std::string, std::string> kZ4Gray = {{"0", "00"}, {"1", "01"}, {"2", "11"}, {"3", "10"}};

std::vector<GroupWord> all_words(const GroupSignature& sig) {
  std::vector<GroupWord> out;
  std::vector<std::uint8_t> codes(static_cast<std::size_t>(sig.l()), 0);
  const auto radix = [&](int c) -> std::uint8_t {
    const auto f = sig.factor(c);
    return f == GroupSignature::Factor::Z2 ? 2 : (f == GroupSignature::Factor::Z4 ? 4 : 8);
  };
  while (true) {
    out.push_back(GroupWord::from_codes(sig, codes));
    int c = 0;
    while (c < sig.l() && ++codes[static_cast<std::size_t>(c)] == radix(c)) codes[static_cast<std::size_t>(c++)] = 0;
    if (c == sig.l()) return out;
  }
}

}  // namespace

TEST_CASE("gray images of single coordinates") {
  for (const auto& [tok, bits] : kQ8Gray) CHECK(gray(word(GroupSignature(0, 0, 1), tok)).to_string() == bits);
  for (const auto& [tok, bits] : kZ4Gray) CHECK(gray(word(GroupSignature(0, 1, 0), tok)).to_string() == bits);
  CHECK(gray(word(GroupSignature(1, 0, 0), "1")).to_string() == "1");
  CHECK(gray_q8(q8::kA) == 0b0101);
  CHECK(gray_z4(2) == 0b11);
}

TEST_CASE("gray image concatenates blocks") {
  const GroupSignature sig(1, 2, 2);
  CHECK(gray(word(sig, "1 1 3 ab a3b")).to_string() == "1" "01" "10" "1100" "0011");
}

TEST_CASE("gray map is injective and inverted by gray_inv") {
  const GroupSignature sig(1, 1, 1);
  std::set<BinaryVector> seen;
  for (const auto& w : all_words(sig)) {
    CHECK(seen.insert(gray(w)).second);
    CHECK(gray_inv(gray(w), sig) == w);
  }
  CHECK_THROWS(gray_inv(BinaryVector::from_string("1000"), GroupSignature(0, 0, 1)));
  CHECK_THROWS(gray_inv(BinaryVector::from_string("10"), GroupSignature(0, 0, 1)));
}

TEST_CASE("gray weight is translation invariant under multiplication") {
  // d(x, y) = d(xu, yu) and d(ux, uy) for every u.
  for (const auto& sig : {GroupSignature(0, 0, 1), GroupSignature(0, 1, 0)}) {
    const auto all = all_words(sig);
    for (const auto& x : all)
      for (const auto& y : all)
        for (const auto& u : all) {
          REQUIRE(distance(gray(x), gray(y)) == distance(gray(mul(x, u)), gray(mul(y, u))));
          REQUIRE(distance(gray(x), gray(y)) == distance(gray(mul(u, x)), gray(mul(u, y))));
        }
  }
  std::mt19937_64 rng(3);
  const GroupSignature big(3, 4, 5);
  for (int i = 0; i < 2000; ++i) {
    const auto x = random_word(big, rng), y = random_word(big, rng), u = random_word(big, rng);
    REQUIRE(distance(gray(x), gray(y)) == distance(gray(mul(x, u)), gray(mul(y, u))));
  }
}

TEST_CASE("gray image is propelinear through pi_of") {
  for (const auto& sig : {GroupSignature(0, 0, 1), GroupSignature(0, 1, 0)}) {
    const auto all = all_words(sig);
    for (const auto& w : all)
      for (const auto& z : all) REQUIRE(gray(mul(w, z)) == gray(w) + pi_of(w).apply(gray(z)));
  }
  std::mt19937_64 rng(4);
  const GroupSignature big(2, 3, 4);
  for (int i = 0; i < 2000; ++i) {
    const auto w = random_word(big, rng), z = random_word(big, rng);
    REQUIRE(gray(mul(w, z)) == gray(w) + pi_of(w).apply(gray(z)));
  }
}

TEST_CASE("gray weight of u is the full length") {
  const GroupSignature sig(2, 3, 4);
  CHECK(gray(GroupWord::u_element(sig)).weight() == static_cast<std::size_t>(sig.n()));
}
