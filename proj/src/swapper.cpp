#include "z2z4q8/swapper.hpp"

#include <array>

#include "z2z4q8/gray.hpp"

namespace z2z4q8 {

namespace {

// Per-coordinate swapper tables evaluated from the definition at startup.
struct SwapperTables {
  std::array<std::array<std::uint8_t, 4>, 4> z4{};
  std::array<std::array<std::uint8_t, 8>, 8> q8{};

  SwapperTables() {
    std::array<std::uint8_t, 4> z4_inv{};
    for (std::uint8_t v = 0; v < 4; ++v) z4_inv[gray_z4(v)] = v;
    for (std::uint8_t x = 0; x < 4; ++x)
      for (std::uint8_t y = 0; y < 4; ++y)
        z4[x][y] = z4_inv[gray_z4(x) ^ gray_z4(y) ^ gray_z4(static_cast<std::uint8_t>((x + y) % 4))];

    std::array<std::uint8_t, 16> q8_inv{};
    for (std::uint8_t v = 0; v < 8; ++v) q8_inv[gray_q8(v)] = v;
    for (std::uint8_t x = 0; x < 8; ++x)
      for (std::uint8_t y = 0; y < 8; ++y)
        q8[x][y] = q8_inv[gray_q8(x) ^ gray_q8(y) ^ gray_q8(q8::mul(x, y))];
  }
};

const SwapperTables& tables() {
  static const SwapperTables t;
  return t;
}

}  // namespace

GroupWord swapper(const GroupWord& x, const GroupWord& y) {
  const auto& sig = x.signature();
  if (!(sig == y.signature())) throw SignatureMismatch(sig, y.signature());
  const auto& t = tables();
  std::vector<std::uint8_t> codes(static_cast<std::size_t>(sig.l()), 0);
  for (int c = sig.k1; c < sig.l(); ++c) {
    const auto a = x.code(c), b = y.code(c);
    codes[static_cast<std::size_t>(c)] = sig.factor(c) == GroupSignature::Factor::Z4 ? t.z4[a][b] : t.q8[a][b];
  }
  return GroupWord::from_codes(sig, codes);
}

}  // namespace z2z4q8
