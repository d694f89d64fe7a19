#include <doctest.h>

#include <array>

#include "support.hpp"
#include "z2z4q8/gray.hpp"
#include "z2z4q8/sampling.hpp"
#include "z2z4q8/swapper.hpp"

using namespace testing;

namespace {

// Gray patterns indexed by code, written out independently of the library.
constexpr std::array<unsigned, 8> kQ8Bits = {0b0000, 0b0101, 0b1111, 0b1010, 0b0110, 0b1100, 0b1001, 0b0011};
constexpr std::array<unsigned, 4> kZ4Bits = {0b00, 0b01, 0b11, 0b10};

template <std::size_t N>
std::uint8_t preimage(const std::array<unsigned, N>& table, unsigned bits) {
  for (std::size_t i = 0; i < N; ++i)
    if (table[i] == bits) return static_cast<std::uint8_t>(i);
  FAIL("pattern outside the image");
  return 0;
}

// Reference swapper table by class, hard-coded. Row x, column y.
// Z4 classes {0,2}, {1,3}; Q8 classes {1,a2}, {a,a3}, {b,a2b}, {ab,a3b}.
constexpr int kZ4Table[2][2] = {{0, 0}, {0, 2}};
constexpr int kQ8Table[4][4] = {{0, 0, 0, 0}, {0, 2, 2, 0}, {0, 0, 2, 2}, {0, 2, 0, 2}};
int q8_class(std::uint8_t x) { return x == 0 || x == 2 ? 0 : (x == 1 || x == 3 ? 1 : (x == 4 || x == 6 ? 2 : 3)); }

GroupWord single(const GroupSignature& sig, std::uint8_t code) {
  const std::uint8_t c[1] = {code};
  return GroupWord::from_codes(sig, c);
}

}  // namespace

TEST_CASE("swapper on Z4 matches the definition and the table") {
  const GroupSignature sig(0, 1, 0);
  for (std::uint8_t x = 0; x < 4; ++x)
    for (std::uint8_t y = 0; y < 4; ++y) {
      const auto want = preimage(kZ4Bits, kZ4Bits[x] ^ kZ4Bits[y] ^ kZ4Bits[(x + y) % 4]);
      const auto got = swapper(single(sig, x), single(sig, y)).code(0);
      CHECK(got == want);
      CHECK(got == kZ4Table[x % 2][y % 2]);
    }
}

TEST_CASE("swapper on Q8 matches the definition and the table") {
  const GroupSignature sig(0, 0, 1);
  for (std::uint8_t x = 0; x < 8; ++x)
    for (std::uint8_t y = 0; y < 8; ++y) {
      const auto want = preimage(kQ8Bits, kQ8Bits[x] ^ kQ8Bits[y] ^ kQ8Bits[q8::mul(x, y)]);
      const auto got = swapper(single(sig, x), single(sig, y)).code(0);
      CHECK(got == want);
      CHECK(got == kQ8Table[q8_class(x)][q8_class(y)]);
    }
}

TEST_CASE("swapper on Z2 is trivial") {
  const GroupSignature sig(1, 0, 0);
  for (std::uint8_t x = 0; x < 2; ++x)
    for (std::uint8_t y = 0; y < 2; ++y) CHECK(swapper(single(sig, x), single(sig, y)).is_identity());
}

TEST_CASE("swapper identities on random words") {
  std::mt19937_64 rng(11);
  const GroupSignature sig(2, 2, 2);
  const auto e = GroupWord::identity(sig);
  for (int i = 0; i < 5000; ++i) {
    const auto x = random_word(sig, rng), y = random_word(sig, rng), w = random_word(sig, rng);
    const auto z = mul(w, w);  // order at most 2
    REQUIRE(swapper(mul(z, x), y) == swapper(x, y));
    REQUIRE(swapper(x, mul(z, y)) == swapper(x, y));
    REQUIRE(swapper(z, x) == e);
    REQUIRE(swapper(x, z) == e);
    REQUIRE(swapper(x, inv(x)) == swapper(x, x));
    REQUIRE(mul(swapper(x, y), swapper(y, x)) == commutator(x, y));
    REQUIRE(swapper(x, x) == mul(x, x));
    REQUIRE(swapper(x, mul(y, w)) == mul(swapper(x, y), swapper(x, w)));
    REQUIRE(swapper(mul(x, y), w) == mul(swapper(x, w), swapper(y, w)));
    REQUIRE(order(swapper(x, y)) <= 2);
    REQUIRE(gray(mul(swapper(x, y), mul(x, y))) == gray(x) + gray(y));
  }
}
