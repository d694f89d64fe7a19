#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "z2z4q8/kernels.hpp"
#include "z2z4q8/sampling.hpp"

namespace z2z4q8 {

struct SearchOptions {
  /// Binary length, a power of two >= 2.
  int length = 16;
  /// Shape to keep, or 0 for any.
  int shape = 0;
  std::uint64_t seed = 1;
  std::size_t budget = 10000;
  Exec exec = Exec::Parallel;
};

struct SearchHit {
  std::size_t sample = 0;  ///< first sample index producing this code
  HadamardSample found;
  int shape = 0;
  CodeType type;
  int rank = 0;
  int kernel_dim = 0;
};

struct SearchResult {
  /// Distinct codes of the requested shape, by first sample index.
  std::vector<SearchHit> hits;
  /// (rank, kernel_dim) over every sample of the requested shape, repeats included.
  std::map<std::pair<int, int>, std::size_t> rank_kernel_counts;
};

/// Samples `budget` Hadamard codes of the given length from the
/// constructions. Sample i depends only on (seed, i), so the result does not
/// depend on the execution policy.
[[nodiscard]] SearchResult search(const SearchOptions& opt);

}  // namespace z2z4q8
