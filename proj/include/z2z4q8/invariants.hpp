#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "z2z4q8/binary.hpp"
#include "z2z4q8/kernels.hpp"
#include "z2z4q8/subgroup.hpp"

namespace z2z4q8 {

/// Two independent computations of the same quantity disagreed, or a proved
/// inequality failed where the library asserts it.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CheckOptions {
  Exec exec = Exec::Parallel;
  std::uint64_t seed = 1;
  /// Pair checks are exhaustive up to this order, sampled above.
  std::size_t exhaustive_pair_order = std::size_t{1} << 11;
  /// Triple checks are exhaustive up to this order, sampled above.
  std::size_t exhaustive_triple_order = std::size_t{1} << 10;
  std::size_t samples = 100000;
  /// Also search the binary kernel over all of Z2^n (n <= 24).
  bool full_kernel_check = false;
  std::size_t max_order = kDefaultMaxOrder;
};

[[nodiscard]] std::vector<BinaryVector> gray_images(const CodeGroup& c);

/// D = <C, S(C)>, built from C and the swappers of generator pairs.
[[nodiscard]] CodeGroup span_group(const CodeGroup& c, std::size_t max_order = kDefaultMaxOrder);

[[nodiscard]] int rank_via_span(const CodeGroup& c, std::size_t max_order = kDefaultMaxOrder);
[[nodiscard]] int rank_via_elimination(const CodeGroup& c);

/// Translation test over the codewords; sorted.
[[nodiscard]] std::vector<BinaryVector> binary_kernel(const CodeGroup& c, Exec exec = Exec::Parallel);

[[nodiscard]] bool is_linear(const CodeGroup& c);
[[nodiscard]] bool is_abelian(const CodeGroup& c);
[[nodiscard]] std::map<std::size_t, std::size_t> weight_distribution(const CodeGroup& c);

struct StructureReport {
  GroupSignature signature;
  std::size_t order = 0;
  CodeType type;
  std::optional<int> m;  ///< n = 2^m when n is a power of two
  int rank = 0;
  int kernel_dim = 0;
  int h = 0;  ///< rank - (sigma + delta + rho)
  bool is_linear = false;
  bool is_abelian = false;
  std::map<std::size_t, std::size_t> weight_distribution;
};

/// Type, rank, kernel, linearity and weights. Rank and kernel are each
/// computed two ways and compared; a mismatch throws InvariantViolation.
[[nodiscard]] StructureReport analyze_structure(const CodeGroup& c, const CheckOptions& opt = {});

struct BoundCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool ok = true;
  /// Failure tolerated by an explicit allow-list entry.
  bool excepted = false;
};

struct BoundReport {
  std::vector<BoundCheck> checks;

  void add(std::string name, long long lhs, long long rhs, bool ok, bool excepted = false) {
    checks.push_back({std::move(name), lhs, rhs, ok, excepted});
  }
  void append(const BoundReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  [[nodiscard]] bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  [[nodiscard]] const BoundCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// General inequalities between type, rank and kernel, the subgroup chain
/// C' <= T <= Z <= K, and the pairwise square/commutator facts. Pair checks
/// report the number of offending pairs as lhs against rhs = 0.
[[nodiscard]] BoundReport check_bounds(const CodeGroup& c, const StructureReport& s, const CheckOptions& opt = {});

[[nodiscard]] constexpr long long binom2(long long n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Index tuples to test against a predicate: every tuple over [0, size)^K
/// when exhaustive, otherwise `samples` tuples drawn from a seeded generator.
template <std::size_t K>
class IndexPlan {
 public:
  IndexPlan(std::size_t size, bool exhaustive, std::size_t samples, std::uint64_t seed)
      : size_(size), exhaustive_(exhaustive) {
    if (exhaustive_ || size_ == 0) {
      exhaustive_ = true;
      return;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, size_ - 1);
    sampled_.resize(samples);
    for (auto& t : sampled_)
      for (auto& x : t) x = pick(rng);
  }

  [[nodiscard]] bool exhaustive() const noexcept { return exhaustive_; }
  [[nodiscard]] std::size_t count() const noexcept {
    if (!exhaustive_) return sampled_.size();
    std::size_t c = 1;
    for (std::size_t i = 0; i < K; ++i) c *= size_;
    return c;
  }
  [[nodiscard]] std::array<std::size_t, K> operator[](std::size_t i) const noexcept {
    if (!exhaustive_) return sampled_[i];
    std::array<std::size_t, K> t{};
    for (std::size_t j = K; j-- > 0;) {
      t[j] = i % size_;
      i /= size_;
    }
    return t;
  }

 private:
  std::size_t size_;
  bool exhaustive_;
  std::vector<std::array<std::size_t, K>> sampled_;
};

}  // namespace z2z4q8
