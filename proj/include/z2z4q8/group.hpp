#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2z4q8 {

/// Shape of the ambient group Z2^k1 x Z4^k2 x Q8^k3.
///
/// Coordinates are ordered by block: the k1 binary coordinates first, then
/// the k2 quaternary ones, then the k3 quaternion ones.
struct GroupSignature {
  int k1 = 0;
  int k2 = 0;
  int k3 = 0;

  GroupSignature() = default;
  GroupSignature(int z2, int z4, int q8);

  /// Binary length of the Gray image.
  [[nodiscard]] int n() const noexcept { return k1 + 2 * k2 + 4 * k3; }
  /// Number of group coordinates.
  [[nodiscard]] int l() const noexcept { return k1 + k2 + k3; }
  [[nodiscard]] std::size_t words() const noexcept { return (static_cast<std::size_t>(l()) + 63) / 64; }

  enum class Factor : std::uint8_t { Z2, Z4, Q8 };
  [[nodiscard]] Factor factor(int coord) const noexcept {
    return coord < k1 ? Factor::Z2 : (coord < k1 + k2 ? Factor::Z4 : Factor::Q8);
  }
  /// First binary position of a coordinate's Gray block.
  [[nodiscard]] int bit_offset(int coord) const noexcept;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const GroupSignature&, const GroupSignature&) = default;
};

class SignatureMismatch : public std::invalid_argument {
 public:
  SignatureMismatch(const GroupSignature& a, const GroupSignature& b);
};

/// Quaternion group element in canonical form a^i b^j, encoded as i + 4j.
///
/// Encoding order matches the token alphabet 1, a, a2, a3, b, ab, a2b, a3b.
namespace q8 {
inline constexpr std::uint8_t kOne = 0, kA = 1, kA2 = 2, kA3 = 3, kB = 4, kAB = 5, kA2B = 6, kA3B = 7;

[[nodiscard]] constexpr std::uint8_t make(int i, int j) noexcept {
  return static_cast<std::uint8_t>(((i % 4 + 4) % 4) + 4 * (j & 1));
}
[[nodiscard]] constexpr int a_exp(std::uint8_t code) noexcept { return code & 3; }
[[nodiscard]] constexpr int b_exp(std::uint8_t code) noexcept { return (code >> 2) & 1; }

/// (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + (-1)^j1 i2 + 2 j1 j2) b^(j1 + j2).
[[nodiscard]] constexpr std::uint8_t mul(std::uint8_t x, std::uint8_t y) noexcept {
  const int i1 = a_exp(x), j1 = b_exp(x), i2 = a_exp(y), j2 = b_exp(y);
  return make(i1 + (j1 ? -i2 : i2) + 2 * j1 * j2, j1 + j2);
}
[[nodiscard]] constexpr std::uint8_t inv(std::uint8_t x) noexcept {
  return b_exp(x) ? make(a_exp(x) + 2, 1) : make(-a_exp(x), 0);
}
[[nodiscard]] const char* token(std::uint8_t code) noexcept;
}  // namespace q8

/// One element of Z2^k1 x Z4^k2 x Q8^k3.
///
/// Stored bit-sliced: three planes of `words()` 64-bit words each. For
/// coordinate c, plane 0 holds bit 0 of its value, plane 1 bit 1, plane 2 the
/// b-exponent of a quaternion entry. A Z2 entry uses plane 0 only, a Z4 entry
/// planes 0-1, a Q8 entry a^i b^j all three (i in planes 0-1). Products are a
/// handful of word operations independent of the number of coordinates.
class GroupWord {
 public:
  GroupWord() = default;

  [[nodiscard]] static GroupWord identity(const GroupSignature& sig);
  /// The element with the order-2 entry in every coordinate.
  [[nodiscard]] static GroupWord u_element(const GroupSignature& sig);
  /// Builds from per-coordinate codes: Z2 in {0,1}, Z4 in {0..3}, Q8 in {0..7}.
  [[nodiscard]] static GroupWord from_codes(const GroupSignature& sig, std::span<const std::uint8_t> codes);

  [[nodiscard]] const GroupSignature& signature() const noexcept { return sig_; }
  [[nodiscard]] std::uint8_t code(int coord) const noexcept;
  [[nodiscard]] std::vector<std::uint8_t> codes() const;
  [[nodiscard]] std::span<const std::uint64_t> planes() const noexcept { return planes_; }

  [[nodiscard]] bool is_identity() const noexcept;
  [[nodiscard]] std::size_t hash() const noexcept;

  friend bool operator==(const GroupWord& a, const GroupWord& b) noexcept {
    return a.sig_ == b.sig_ && a.planes_ == b.planes_;
  }
  /// Lexicographic on coordinate codes, first coordinate most significant.
  friend std::strong_ordering operator<=>(const GroupWord& a, const GroupWord& b) noexcept;

 private:
  GroupWord(const GroupSignature& sig, std::vector<std::uint64_t> planes) : sig_(sig), planes_(std::move(planes)) {}

  friend GroupWord mul(const GroupWord&, const GroupWord&);
  friend GroupWord inv(const GroupWord&);

  GroupSignature sig_;
  std::vector<std::uint64_t> planes_;
};

struct GroupWordHash {
  std::size_t operator()(const GroupWord& w) const noexcept { return w.hash(); }
};

[[nodiscard]] GroupWord mul(const GroupWord& x, const GroupWord& y);
[[nodiscard]] GroupWord inv(const GroupWord& w);
[[nodiscard]] GroupWord pow(const GroupWord& w, long long h);
/// 1, 2 or 4.
[[nodiscard]] int order(const GroupWord& w);
/// (x,y) = x^-1 y^-1 x y.
[[nodiscard]] GroupWord commutator(const GroupWord& x, const GroupWord& y);
/// x^y = y^-1 x y.
[[nodiscard]] GroupWord conjugate(const GroupWord& x, const GroupWord& y);

[[nodiscard]] inline GroupWord operator*(const GroupWord& x, const GroupWord& y) { return mul(x, y); }

/// Space separated tokens, e.g. "1 2 a3b".
[[nodiscard]] std::string to_string(const GroupWord& w);

}  // namespace z2z4q8
