#include "z2z4q8/group.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <tuple>

namespace z2z4q8 {

namespace {

// Bits [from, to) of word `w` (coordinates 64w .. 64w+63).
std::uint64_t range_mask(std::size_t w, int from, int to) noexcept {
  const long lo = static_cast<long>(w) * 64;
  const long a = std::max<long>(from - lo, 0);
  const long b = std::min<long>(to - lo, 64);
  if (a >= b) return 0;
  const std::uint64_t upper = b == 64 ? ~0ULL : ((1ULL << b) - 1);
  const std::uint64_t lower = (1ULL << a) - 1;
  return upper & ~lower;
}

struct Masks {
  std::uint64_t hi;  // coordinates with a second value bit (Z4, Q8)
  std::uint64_t j;   // quaternion coordinates
};

Masks masks(const GroupSignature& sig, std::size_t w) noexcept {
  return {range_mask(w, sig.k1, sig.l()), range_mask(w, sig.k1 + sig.k2, sig.l())};
}

}  // namespace

GroupSignature::GroupSignature(int z2, int z4, int q8) : k1(z2), k2(z4), k3(q8) {
  if (k1 < 0 || k2 < 0 || k3 < 0) throw std::invalid_argument("signature counts must be non-negative");
  if (l() < 1) throw std::invalid_argument("signature must have at least one coordinate");
}

int GroupSignature::bit_offset(int coord) const noexcept {
  if (coord < k1) return coord;
  if (coord < k1 + k2) return k1 + 2 * (coord - k1);
  return k1 + 2 * k2 + 4 * (coord - k1 - k2);
}

std::string GroupSignature::to_string() const {
  std::ostringstream os;
  os << "Z2^" << k1 << " x Z4^" << k2 << " x Q8^" << k3;
  return os.str();
}

SignatureMismatch::SignatureMismatch(const GroupSignature& a, const GroupSignature& b)
    : std::invalid_argument("signature mismatch: " + a.to_string() + " vs " + b.to_string()) {}

const char* q8::token(std::uint8_t code) noexcept {
  static constexpr const char* kTokens[8] = {"1", "a", "a2", "a3", "b", "ab", "a2b", "a3b"};
  return kTokens[code & 7];
}

GroupWord GroupWord::identity(const GroupSignature& sig) {
  return GroupWord(sig, std::vector<std::uint64_t>(3 * sig.words(), 0));
}

GroupWord GroupWord::u_element(const GroupSignature& sig) {
  // Z2: 1 (plane 0); Z4: 2 and Q8: a^2 (plane 1).
  const std::size_t W = sig.words();
  std::vector<std::uint64_t> p(3 * W, 0);
  for (std::size_t w = 0; w < W; ++w) {
    p[w] = range_mask(w, 0, sig.k1);
    p[W + w] = range_mask(w, sig.k1, sig.l());
  }
  return GroupWord(sig, std::move(p));
}

GroupWord GroupWord::from_codes(const GroupSignature& sig, std::span<const std::uint8_t> codes) {
  if (codes.size() != static_cast<std::size_t>(sig.l())) {
    throw std::invalid_argument("expected " + std::to_string(sig.l()) + " coordinates, got " +
                                std::to_string(codes.size()));
  }
  const std::size_t W = sig.words();
  std::vector<std::uint64_t> p(3 * W, 0);
  for (int c = 0; c < sig.l(); ++c) {
    const std::uint8_t v = codes[static_cast<std::size_t>(c)];
    const int limit = sig.factor(c) == GroupSignature::Factor::Z2 ? 2 : sig.factor(c) == GroupSignature::Factor::Z4 ? 4 : 8;
    if (v >= limit) throw std::invalid_argument("coordinate " + std::to_string(c + 1) + " value out of range");
    const std::size_t w = static_cast<std::size_t>(c) / 64;
    const std::uint64_t bit = 1ULL << (c % 64);
    if (v & 1) p[w] |= bit;
    if (v & 2) p[W + w] |= bit;
    if (v & 4) p[2 * W + w] |= bit;
  }
  return GroupWord(sig, std::move(p));
}

std::uint8_t GroupWord::code(int coord) const noexcept {
  const std::size_t W = sig_.words();
  const std::size_t w = static_cast<std::size_t>(coord) / 64;
  const int b = coord % 64;
  return static_cast<std::uint8_t>(((planes_[w] >> b) & 1) | (((planes_[W + w] >> b) & 1) << 1) |
                                   (((planes_[2 * W + w] >> b) & 1) << 2));
}

std::vector<std::uint8_t> GroupWord::codes() const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(sig_.l()));
  for (int c = 0; c < sig_.l(); ++c) out[static_cast<std::size_t>(c)] = code(c);
  return out;
}

bool GroupWord::is_identity() const noexcept {
  for (auto v : planes_)
    if (v) return false;
  return true;
}

std::size_t GroupWord::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(sig_.l());
  for (auto v : planes_) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

std::strong_ordering operator<=>(const GroupWord& a, const GroupWord& b) noexcept {
  if (auto c = std::tie(a.sig_.k1, a.sig_.k2, a.sig_.k3) <=> std::tie(b.sig_.k1, b.sig_.k2, b.sig_.k3); c != 0) return c;
  const std::size_t W = a.sig_.words();
  for (std::size_t w = 0; w < W; ++w) {
    const std::uint64_t diff =
        (a.planes_[w] ^ b.planes_[w]) | (a.planes_[W + w] ^ b.planes_[W + w]) | (a.planes_[2 * W + w] ^ b.planes_[2 * W + w]);
    if (diff) {
      const int coord = static_cast<int>(w * 64) + std::countr_zero(diff);
      return a.code(coord) <=> b.code(coord);
    }
  }
  return std::strong_ordering::equal;
}

GroupWord mul(const GroupWord& x, const GroupWord& y) {
  if (!(x.sig_ == y.sig_)) throw SignatureMismatch(x.sig_, y.sig_);
  const std::size_t W = x.sig_.words();
  std::vector<std::uint64_t> p(3 * W);
  for (std::size_t w = 0; w < W; ++w) {
    const Masks m = masks(x.sig_, w);
    const std::uint64_t lx = x.planes_[w], hx = x.planes_[W + w], jx = x.planes_[2 * W + w];
    const std::uint64_t ly = y.planes_[w], hy = y.planes_[W + w], jy = y.planes_[2 * W + w];
    // b a^i = a^-i b: negate y's a-exponent where x carries b.
    const std::uint64_t hy_twisted = hy ^ (ly & jx);
    p[w] = lx ^ ly;
    p[W + w] = (hx ^ hy_twisted ^ (lx & ly) ^ (jx & jy)) & m.hi;
    p[2 * W + w] = (jx ^ jy) & m.j;
  }
  return GroupWord(x.sig_, std::move(p));
}

GroupWord inv(const GroupWord& w) {
  const std::size_t W = w.sig_.words();
  std::vector<std::uint64_t> p(w.planes_);
  for (std::size_t i = 0; i < W; ++i) {
    const Masks m = masks(w.sig_, i);
    const std::uint64_t lo = w.planes_[i], j = w.planes_[2 * W + i];
    // a^i -> a^-i; a^i b -> a^(i+2) b.
    p[W + i] = (w.planes_[W + i] ^ (lo & ~j) ^ j) & m.hi;
  }
  return GroupWord(w.sig_, std::move(p));
}

GroupWord pow(const GroupWord& w, long long h) {
  const long long e = ((h % 4) + 4) % 4;
  GroupWord r = GroupWord::identity(w.signature());
  for (long long i = 0; i < e; ++i) r = mul(r, w);
  return r;
}

int order(const GroupWord& w) {
  if (w.is_identity()) return 1;
  return mul(w, w).is_identity() ? 2 : 4;
}

GroupWord commutator(const GroupWord& x, const GroupWord& y) { return mul(mul(inv(x), inv(y)), mul(x, y)); }

GroupWord conjugate(const GroupWord& x, const GroupWord& y) { return mul(mul(inv(y), x), y); }

std::string to_string(const GroupWord& w) {
  std::string out;
  const auto& sig = w.signature();
  for (int c = 0; c < sig.l(); ++c) {
    if (c) out += ' ';
    const auto v = w.code(c);
    if (sig.factor(c) == GroupSignature::Factor::Q8)
      out += q8::token(v);
    else
      out += static_cast<char>('0' + v);
  }
  return out;
}

}  // namespace z2z4q8
