#include "z2z4q8/kernels.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace z2z4q8 {

namespace {

constexpr std::size_t kMaxBruteForceLength = 24;

void require_small(std::size_t n) {
  if (n > kMaxBruteForceLength)
    throw std::invalid_argument("brute force over Z2^" + std::to_string(n) + " refused (limit 2^" +
                                std::to_string(kMaxBruteForceLength) + ")");
}

std::vector<BinaryVector> select(const std::vector<BinaryVector>& candidates, const std::vector<char>& keep) {
  std::vector<BinaryVector> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(candidates[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint32_t pack32(const BinaryVector& v) {
  if (v.size() > 32) throw std::invalid_argument("pack32 needs length <= 32");
  return v.words().empty() ? 0U : static_cast<std::uint32_t>(v.words()[0]);
}

std::vector<BinaryVector> binary_kernel(const std::vector<BinaryVector>& code, Exec exec) {
  const std::unordered_set<BinaryVector, BinaryVectorHash> set(code.begin(), code.end());
  std::vector<char> keep(code.size(), 0);
  const auto translates = [&](std::size_t i) {
    for (const auto& c : code)
      if (!set.contains(code[i] + c)) return false;
    return true;
  };
  const auto n = static_cast<std::ptrdiff_t>(code.size());
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) keep[static_cast<std::size_t>(i)] = translates(static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) keep[static_cast<std::size_t>(i)] = translates(static_cast<std::size_t>(i));
  }
  return select(code, keep);
}

std::vector<BinaryVector> binary_kernel_full_space(const std::vector<BinaryVector>& code, std::size_t n, Exec exec) {
  require_small(n);
  std::vector<std::uint32_t> packed;
  packed.reserve(code.size());
  for (const auto& c : code) packed.push_back(pack32(c));
  std::vector<char> member(std::size_t{1} << n, 0);
  for (auto p : packed) member[p] = 1;

  const std::size_t space = std::size_t{1} << n;
  std::vector<char> keep(space, 0);
  const auto translates = [&](std::size_t z) {
    for (auto p : packed)
      if (!member[p ^ z]) return false;
    return true;
  };
  const auto total = static_cast<std::ptrdiff_t>(space);
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t z = 0; z < total; ++z) keep[static_cast<std::size_t>(z)] = translates(static_cast<std::size_t>(z));
  } else {
#pragma omp parallel for schedule(dynamic, 1024)
    for (std::ptrdiff_t z = 0; z < total; ++z) keep[static_cast<std::size_t>(z)] = translates(static_cast<std::size_t>(z));
  }

  std::vector<BinaryVector> out;
  for (std::size_t z = 0; z < space; ++z) {
    if (!keep[z]) continue;
    BinaryVector v(n);
    if (n) v.words()[0] = z;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t covering_radius(const std::vector<BinaryVector>& code, std::size_t n, Exec exec) {
  require_small(n);
  if (code.empty()) throw std::invalid_argument("covering radius of an empty code");
  std::vector<std::uint32_t> packed;
  packed.reserve(code.size());
  for (const auto& c : code) packed.push_back(pack32(c));

  const auto nearest = [&](std::uint32_t v) {
    int best = 64;
    for (auto p : packed) best = std::min(best, std::popcount(p ^ v));
    return static_cast<std::size_t>(best);
  };
  const auto total = static_cast<std::ptrdiff_t>(std::size_t{1} << n);
  std::size_t radius = 0;
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t v = 0; v < total; ++v) radius = std::max(radius, nearest(static_cast<std::uint32_t>(v)));
  } else {
#pragma omp parallel for schedule(dynamic, 1024) reduction(max : radius)
    for (std::ptrdiff_t v = 0; v < total; ++v) radius = std::max(radius, nearest(static_cast<std::uint32_t>(v)));
  }
  return radius;
}

}  // namespace z2z4q8
