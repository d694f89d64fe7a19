#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "z2z4q8/subgroup.hpp"

namespace z2z4q8 {

/// Generator for job `index` of a run seeded with `seed`, independent of
/// how jobs are scheduled.
[[nodiscard]] std::mt19937_64 job_rng(std::uint64_t seed, std::uint64_t index);

[[nodiscard]] GroupWord random_word(const GroupSignature& sig, std::mt19937_64& rng);
/// Signature with 1 <= n <= max_n.
[[nodiscard]] GroupSignature random_signature(int max_n, std::mt19937_64& rng);

/// Subgroup generated by 1..4 random words of a random signature with
/// n <= max_n, redrawn until its order is at most max_order.
[[nodiscard]] CodeGroup random_subgroup(int max_n, std::size_t max_order, std::mt19937_64& rng);

/// g with g^2 in C normalizing C: one of a few random words if any works,
/// otherwise an element of C times a random central involution of G.
[[nodiscard]] GroupWord random_normalizing(const CodeGroup& c, std::mt19937_64& rng);

/// How a sampled Hadamard code was built.
struct HadamardSample {
  CodeGroup code;
  std::string recipe;
};

/// Abelian Hadamard code of length 2^m over Z2^k1 x Z4^k2: rejection
/// sampling for m <= 3, Kronecker doubling of a smaller one above.
[[nodiscard]] HadamardSample random_z2z4_hadamard(int m, std::mt19937_64& rng);

/// Hadamard code of length 2^m from a Z2Z4 code, a lifted-and-extended
/// one, or a generalized Kronecker doubling of a smaller sample.
[[nodiscard]] HadamardSample random_hadamard(int m, std::mt19937_64& rng);

/// As random_hadamard, but always with quaternion coordinates when m >= 2.
[[nodiscard]] HadamardSample random_quaternionic_hadamard(int m, std::mt19937_64& rng);

}  // namespace z2z4q8
