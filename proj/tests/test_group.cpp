#include <doctest.h>

#include <array>
#include <random>

#include "support.hpp"
#include "z2z4q8/sampling.hpp"

using namespace testing;

namespace {

// Unit quaternions +-1, +-i, +-j, +-k as (sign, unit) with unit 0..3 = 1, i, j, k.
struct Quat {
  int sign;
  int unit;
  bool operator==(const Quat&) const = default;
};

Quat hamilton(Quat x, Quat y) {
  // unit products: row * column
  static constexpr std::array<std::array<Quat, 4>, 4> t{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  const Quat p = t[static_cast<std::size_t>(x.unit)][static_cast<std::size_t>(y.unit)];
  return {x.sign * y.sign * p.sign, p.unit};
}

// a -> i, b -> j.
Quat as_quat(std::uint8_t code) {
  Quat q{1, 0};
  for (int s = 0; s < q8::a_exp(code); ++s) q = hamilton(q, {1, 1});
  if (q8::b_exp(code)) q = hamilton(q, {1, 2});
  return q;
}

std::uint8_t coord_mul(GroupSignature::Factor f, std::uint8_t x, std::uint8_t y) {
  switch (f) {
    case GroupSignature::Factor::Z2: return static_cast<std::uint8_t>((x + y) % 2);
    case GroupSignature::Factor::Z4: return static_cast<std::uint8_t>((x + y) % 4);
    default: return q8::mul(x, y);
  }
}

}  // namespace

TEST_CASE("q8 products agree with quaternion multiplication") {
  std::set<std::pair<int, int>> images;
  for (std::uint8_t x = 0; x < 8; ++x) {
    images.insert({as_quat(x).sign, as_quat(x).unit});
    for (std::uint8_t y = 0; y < 8; ++y) CHECK(as_quat(q8::mul(x, y)) == hamilton(as_quat(x), as_quat(y)));
    CHECK(q8::mul(x, q8::inv(x)) == q8::kOne);
  }
  CHECK(images.size() == 8);
}

TEST_CASE("q8 relations and tokens") {
  CHECK(q8::mul(q8::kA, q8::mul(q8::kA, q8::kA2)) == q8::kOne);
  CHECK(q8::mul(q8::kB, q8::kB) == q8::kA2);
  CHECK(q8::mul(q8::kB, q8::kA) == q8::kA3B);
  CHECK(std::string(q8::token(q8::kA3B)) == "a3b");
  CHECK(std::string(q8::token(q8::kOne)) == "1");
}

TEST_CASE("word arithmetic is coordinatewise") {
  std::mt19937_64 rng(7);
  // 70 coordinates per block crosses the 64-bit word boundary.
  for (const GroupSignature sig : {GroupSignature(3, 2, 1), GroupSignature(70, 70, 70), GroupSignature(0, 0, 5)}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_word(sig, rng), y = random_word(sig, rng);
      const auto xy = mul(x, y);
      const auto xi = inv(x);
      for (int c = 0; c < sig.l(); ++c) {
        const auto f = sig.factor(c);
        REQUIRE(xy.code(c) == coord_mul(f, x.code(c), y.code(c)));
        REQUIRE(coord_mul(f, x.code(c), xi.code(c)) == 0);
      }
      CHECK(mul(xy, inv(xy)).is_identity());
      CHECK(commutator(x, y) == mul(mul(inv(x), inv(y)), mul(x, y)));
      CHECK(conjugate(x, y) == mul(mul(inv(y), x), y));
      CHECK(pow(x, order(x)).is_identity());
      CHECK(pow(x, -1) == xi);
      CHECK(GroupWord::from_codes(sig, x.codes()) == x);
    }
  }
}

TEST_CASE("element orders") {
  const GroupSignature sig(1, 1, 1);
  CHECK(order(word(sig, "0 0 1")) == 1);
  CHECK(order(word(sig, "1 2 a2")) == 2);
  CHECK(order(word(sig, "0 1 1")) == 4);
  CHECK(order(word(sig, "0 0 ab")) == 4);
  CHECK(GroupWord::u_element(sig) == word(sig, "1 2 a2"));
}

TEST_CASE("signature layout") {
  const GroupSignature sig(2, 3, 4);
  CHECK(sig.n() == 2 + 6 + 16);
  CHECK(sig.l() == 9);
  CHECK(sig.bit_offset(0) == 0);
  CHECK(sig.bit_offset(2) == 2);
  CHECK(sig.bit_offset(4) == 6);
  CHECK(sig.bit_offset(5) == 8);
  CHECK(sig.bit_offset(8) == 20);
  CHECK_THROWS_AS(mul(GroupWord::identity(sig), GroupWord::identity(GroupSignature(1, 0, 0))), SignatureMismatch);
}

TEST_CASE("ordering is lexicographic on codes") {
  const GroupSignature sig(0, 2, 0);
  CHECK(word(sig, "0 3") < word(sig, "1 0"));
  CHECK(word(sig, "1 0") < word(sig, "1 1"));
}
