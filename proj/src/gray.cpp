#include "z2z4q8/gray.hpp"

#include <array>
#include <stdexcept>

namespace z2z4q8 {

namespace {

// Bit patterns written as 4-character strings read left to right.
constexpr std::array<std::uint8_t, 4> kZ4Gray = {0b00, 0b01, 0b11, 0b10};
constexpr std::array<std::uint8_t, 8> kQ8Gray = {
    0b0000,  // 1
    0b0101,  // a
    0b1111,  // a2
    0b1010,  // a3
    0b0110,  // b
    0b1100,  // ab
    0b1001,  // a2b
    0b0011,  // a3b
};

constexpr std::array<std::uint8_t, 4> invert4(const std::array<std::uint8_t, 4>& t) {
  std::array<std::uint8_t, 4> r{};
  for (std::uint8_t i = 0; i < 4; ++i) r[t[i]] = i;
  return r;
}
constexpr auto kZ4GrayInv = invert4(kZ4Gray);

constexpr std::array<std::uint8_t, 16> q8_inverse_table() {
  std::array<std::uint8_t, 16> r{};
  for (auto& x : r) x = 0xff;
  for (std::uint8_t i = 0; i < 8; ++i) r[kQ8Gray[i]] = i;
  return r;
}
constexpr auto kQ8GrayInv = q8_inverse_table();

}  // namespace

std::uint8_t gray_z4(std::uint8_t v) noexcept { return kZ4Gray[v & 3]; }
std::uint8_t gray_q8(std::uint8_t code) noexcept { return kQ8Gray[code & 7]; }

BinaryVector gray(const GroupWord& w) {
  const auto& sig = w.signature();
  BinaryVector out(static_cast<std::size_t>(sig.n()));
  for (int c = 0; c < sig.l(); ++c) {
    const auto v = w.code(c);
    const auto off = static_cast<std::size_t>(sig.bit_offset(c));
    switch (sig.factor(c)) {
      case GroupSignature::Factor::Z2:
        if (v) out.set(off, true);
        break;
      case GroupSignature::Factor::Z4: {
        const auto g = kZ4Gray[v];
        out.set(off, g & 2);
        out.set(off + 1, g & 1);
        break;
      }
      case GroupSignature::Factor::Q8: {
        const auto g = kQ8Gray[v];
        for (int b = 0; b < 4; ++b) out.set(off + static_cast<std::size_t>(b), (g >> (3 - b)) & 1);
        break;
      }
    }
  }
  return out;
}

GroupWord gray_inv(const BinaryVector& v, const GroupSignature& sig) {
  if (v.size() != static_cast<std::size_t>(sig.n())) {
    throw std::invalid_argument("binary vector of length " + std::to_string(v.size()) +
                                " does not match signature length " + std::to_string(sig.n()));
  }
  std::vector<std::uint8_t> codes(static_cast<std::size_t>(sig.l()));
  for (int c = 0; c < sig.l(); ++c) {
    const auto off = static_cast<std::size_t>(sig.bit_offset(c));
    switch (sig.factor(c)) {
      case GroupSignature::Factor::Z2:
        codes[static_cast<std::size_t>(c)] = v.get(off);
        break;
      case GroupSignature::Factor::Z4:
        codes[static_cast<std::size_t>(c)] = kZ4GrayInv[(v.get(off) << 1) | v.get(off + 1)];
        break;
      case GroupSignature::Factor::Q8: {
        std::uint8_t pat = 0;
        for (std::size_t b = 0; b < 4; ++b) pat = static_cast<std::uint8_t>((pat << 1) | v.get(off + b));
        const auto code = kQ8GrayInv[pat];
        if (code == 0xff) {
          throw std::invalid_argument("block at position " + std::to_string(off + 1) +
                                      " is not a quaternion Gray pattern (odd weight)");
        }
        codes[static_cast<std::size_t>(c)] = code;
        break;
      }
    }
  }
  return GroupWord::from_codes(sig, codes);
}

CoordinatePermutation pi_of(const GroupWord& w) {
  const auto& sig = w.signature();
  auto p = CoordinatePermutation::identity(static_cast<std::size_t>(sig.n()));
  for (int c = sig.k1; c < sig.l(); ++c) {
    const auto v = w.code(c);
    const auto t = static_cast<std::size_t>(sig.bit_offset(c));
    if (sig.factor(c) == GroupSignature::Factor::Z4) {
      if (v & 1) p.swap_positions(t, t + 1);
      continue;
    }
    switch (v) {
      case q8::kA:
      case q8::kA3:
        p.swap_positions(t, t + 1);
        p.swap_positions(t + 2, t + 3);
        break;
      case q8::kB:
      case q8::kA2B:
        p.swap_positions(t, t + 2);
        p.swap_positions(t + 1, t + 3);
        break;
      case q8::kAB:
      case q8::kA3B:
        p.swap_positions(t, t + 3);
        p.swap_positions(t + 1, t + 2);
        break;
      default:
        break;
    }
  }
  return p;
}

}  // namespace z2z4q8
