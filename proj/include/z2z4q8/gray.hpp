#pragma once

#include "z2z4q8/binary.hpp"
#include "z2z4q8/group.hpp"

namespace z2z4q8 {

/// Gray image of a single coordinate value, most significant bit first in
/// the returned low bits: Z2 -> 1 bit, Z4 -> 2 bits, Q8 -> 4 bits.
///
///   Z4: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10
///   Q8: 1 -> 0000, a -> 0101, a2 -> 1111, a3 -> 1010,
///       b -> 0110, ab -> 1100, a2b -> 1001, a3b -> 0011
[[nodiscard]] std::uint8_t gray_z4(std::uint8_t v) noexcept;
[[nodiscard]] std::uint8_t gray_q8(std::uint8_t code) noexcept;

/// Componentwise Gray map onto Z2^n.
[[nodiscard]] BinaryVector gray(const GroupWord& w);
/// Inverse Gray map. Throws on a length mismatch, or on a quaternion block of
/// odd weight: Q8 only reaches the eight even-weight 4-bit patterns.
[[nodiscard]] GroupWord gray_inv(const BinaryVector& v, const GroupSignature& sig);

/// Coordinate permutation associated with w, making the Gray image a
/// propelinear code: gray(w z) = gray(w) + pi_w(gray(z)).
[[nodiscard]] CoordinatePermutation pi_of(const GroupWord& w);

}  // namespace z2z4q8
