#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "z2z4q8/binary.hpp"

namespace z2z4q8 {

/// Execution policy for the quadratic/cubic kernels. Serial is the reference
/// implementation; Parallel uses OpenMP and must give identical results.
enum class Exec : std::uint8_t { Serial, Parallel };

/// Number of indices i in [0, count) with !ok(i). `ok` must be thread-safe.
template <class Pred>
[[nodiscard]] std::size_t count_failures(std::size_t count, const Pred& ok, Exec exec) {
  std::size_t bad = 0;
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < count; ++i)
      if (!ok(i)) ++bad;
    return bad;
  }
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : bad)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    if (!ok(static_cast<std::size_t>(i))) ++bad;
  return bad;
}

/// Smallest index i in [0, count) with !ok(i), if any.
template <class Pred>
[[nodiscard]] std::optional<std::size_t> first_failure(std::size_t count, const Pred& ok, Exec exec) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < count; ++i)
      if (!ok(i)) return i;
    return std::nullopt;
  }
  std::size_t best = count;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 256) reduction(min : best)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (u < best && !ok(u)) best = u;
  }
  if (best == count) return std::nullopt;
  return best;
}

/// Codewords z with z + C = C, for a code containing 0. Input need not be
/// sorted; output is sorted.
[[nodiscard]] std::vector<BinaryVector> binary_kernel(const std::vector<BinaryVector>& code, Exec exec);

/// Same set, searched over all of Z2^n instead of C. Needs n <= 24.
[[nodiscard]] std::vector<BinaryVector> binary_kernel_full_space(const std::vector<BinaryVector>& code, std::size_t n,
                                                                 Exec exec);

/// max over v in Z2^n of the distance from v to the code. Needs n <= 24.
[[nodiscard]] std::size_t covering_radius(const std::vector<BinaryVector>& code, std::size_t n, Exec exec);

/// Low 32 bits of a vector of length <= 32, coordinate i at bit i.
[[nodiscard]] std::uint32_t pack32(const BinaryVector& v);

}  // namespace z2z4q8
