#pragma once

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "z2z4q8/binary.hpp"
#include "z2z4q8/subgroup.hpp"

namespace z2z4q8 {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Componentwise embedding Z2 -> Z4 (i -> 2i), Z4 -> <a> in Q8 (i -> a^i),
/// from Z2^k1 x Z4^k2 into Z4^k1 x Q8^k2. Throws ConstructionError if k3 != 0.
[[nodiscard]] GroupWord xi_lift(const GroupWord& w);
[[nodiscard]] CodeGroup xi_lift(const CodeGroup& c);
/// Inverse on the image 2Z4^k2 x <a>^k3; throws ConstructionError elsewhere.
[[nodiscard]] GroupWord xi_unlift(const GroupWord& w);

[[nodiscard]] bool normalizes(const CodeGroup& c, const GroupWord& x);

/// A codeword c with 2 wt(Phi(xc)) != n, if any.
[[nodiscard]] std::optional<GroupWord> extension_condition_witness(const CodeGroup& cq, const GroupWord& x);

/// <Cq, x> for x normalizing Cq with x^2 in Cq and wt(Phi(xc)) = n/2 on the
/// whole coset. Throws ConstructionError naming the failed precondition.
[[nodiscard]] CodeGroup extend(const CodeGroup& cq, const GroupWord& x);

struct LiftResult {
  CodeGroup lifted;
  GroupWord x;
  CodeGroup extended;
  bool condition_ok = false;
};

/// xi_lift followed by extend; a violated coset-weight condition is
/// reported in condition_ok instead of thrown.
[[nodiscard]] LiftResult lift_and_extend(const CodeGroup& base, const GroupWord& x);

/// Uniform element of Q8 \ <a> in every coordinate, with Z4 coordinates
/// odd; such an x satisfies the coset-weight condition for any lifted code.
[[nodiscard]] GroupWord random_outside_a(const GroupSignature& sig, std::mt19937_64& rng);

/// (a, b) in G x G, laid out per factor: Z2 parts of a then b, Z4 parts of
/// a then b, Q8 parts of a then b.
[[nodiscard]] GroupWord pair_word(const GroupWord& a, const GroupWord& b);
[[nodiscard]] GroupSignature doubled(const GroupSignature& sig);

struct KroneckerResult {
  CodeGroup input;
  GroupWord g;
  CodeGroup output;
  CodeType predicted_type;
};

/// Type of <Delta(C), (g, gu)>: (s+1, d, r) if gC has an element of order at
/// most 2; else (s, d+1, r) if some gc is central in <C, g>; else
/// (s, d1, r + d - d1 + 1) with 2^(s+d1) = |C_Z(C)(g)|.
[[nodiscard]] CodeType predict_kronecker_type(const CodeGroup& c, const GroupWord& g);

/// <Delta(C), (e, u)>.
[[nodiscard]] KroneckerResult kronecker(const CodeGroup& c);
/// <Delta(C), (g, gu)> for g normalizing C with g^2 in C. Throws
/// ConstructionError naming the failed precondition, and InvariantViolation
/// if the computed type differs from the prediction.
[[nodiscard]] KroneckerResult generalized_kronecker(const CodeGroup& c, const GroupWord& g);

/// Automorphisms of Q8 induced by permuting the 4 Gray bits, in
/// lexicographic order of the permutation. p[k] is the source bit of bit k.
struct Q8BitAutomorphism {
  std::array<int, 4> p{};
  std::array<std::uint8_t, 8> map{};
};
[[nodiscard]] const std::vector<Q8BitAutomorphism>& q8_bit_automorphisms();

struct ConverseResult {
  int shape = 0;
  /// The abelian Z2Z4 code whose lift, extended by z, gives the input up to
  /// a coordinate permutation.
  CodeGroup base;
  GroupWord z;
  /// Binary coordinate permutation taking Phi(C) to Phi(extend(lift(base), z)).
  CoordinatePermutation permutation;
  bool round_trip_ok = false;
};

/// Recovers a Z2Z4 code and extension element for a Hadamard code of shape
/// 2 or 3 through its abelian subgroup of index 2. Each quaternion coordinate
/// is moved into <a> by the first bit-permutation automorphism that does so.
/// Throws ConstructionError for other shapes.
[[nodiscard]] ConverseResult structural_converse_check(const CodeGroup& c);

}  // namespace z2z4q8
