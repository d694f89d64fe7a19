#include <doctest.h>

#include <random>

#include "support.hpp"
#include "z2z4q8/kernels.hpp"

using namespace testing;

namespace {

std::vector<BinaryVector> from_strings(std::initializer_list<const char*> rows) {
  std::vector<BinaryVector> out;
  for (auto r : rows) out.push_back(BinaryVector::from_string(r));
  return out;
}

std::vector<BinaryVector> span_of(const std::vector<BinaryVector>& gens, std::size_t n) {
  std::set<BinaryVector> s{BinaryVector(n)};
  for (const auto& g : gens) {
    const std::vector<BinaryVector> cur(s.begin(), s.end());
    for (const auto& v : cur) s.insert(v + g);
  }
  return {s.begin(), s.end()};
}

std::size_t naive_covering_radius(const std::vector<BinaryVector>& code, std::size_t n) {
  std::size_t worst = 0;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    BinaryVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, (x >> i) & 1);
    std::size_t best = n;
    for (const auto& c : code) best = std::min(best, distance(v, c));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<BinaryVector> random_code(std::mt19937_64& rng, std::size_t n, std::size_t size) {
  std::set<BinaryVector> s{BinaryVector(n)};
  while (s.size() < size) {
    BinaryVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    s.insert(v);
  }
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("binary vector basics") {
  auto v = BinaryVector::from_string("10110");
  CHECK(v.size() == 5);
  CHECK(v.weight() == 3);
  CHECK(v.to_string() == "10110");
  CHECK(v.leading() == 0);
  CHECK(complement(v).to_string() == "01001");
  CHECK(distance(v, BinaryVector::ones(5)) == 2);
  v.flip(0);
  CHECK(v.leading() == 2);
  CHECK(BinaryVector(130).leading() == 130);
}

TEST_CASE("coordinate permutations") {
  const CoordinatePermutation p({1, 2, 0});
  CHECK(p.apply(BinaryVector::from_string("100")).to_string() == "010");
  CHECK(p.compose(p.inverse()).is_identity());
  CHECK(p.to_cycle_string() == "(1,2,3)");
  CHECK(CoordinatePermutation::identity(4).to_cycle_string() == "()");
}

TEST_CASE("gf2 basis") {
  Gf2Basis b(4);
  CHECK(b.insert(BinaryVector::from_string("1100")));
  CHECK(b.insert(BinaryVector::from_string("0110")));
  CHECK_FALSE(b.insert(BinaryVector::from_string("1010")));
  CHECK(b.rank() == 2);
  CHECK(b.contains(BinaryVector::from_string("1010")));
  CHECK_FALSE(b.contains(BinaryVector::from_string("0001")));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto code = random_code(rng, 9, 1 + rng() % 20);
    std::vector<std::vector<int>> rows;
    for (const auto& v : code) rows.push_back(bits_of(v));
    CHECK(gf2_rank(code) == static_cast<std::size_t>(naive_rank(rows)));
  }
}

TEST_CASE("covering radius of small codes") {
  // Repetition code of length 3 and the [7,4] Hamming code.
  CHECK(covering_radius(from_strings({"000", "111"}), 3, Exec::Serial) == 1);
  const auto hamming = span_of(from_strings({"1000110", "0100101", "0010011", "0001111"}), 7);
  CHECK(hamming.size() == 16);
  CHECK(covering_radius(hamming, 7, Exec::Serial) == 1);
  CHECK(covering_radius(hamming, 7, Exec::Parallel) == 1);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto code = random_code(rng, 10, 2 + rng() % 30);
    const auto want = naive_covering_radius(code, 10);
    CHECK(covering_radius(code, 10, Exec::Serial) == want);
    CHECK(covering_radius(code, 10, Exec::Parallel) == want);
  }
}

TEST_CASE("binary kernel of linear and nonlinear codes") {
  const auto lin = span_of(from_strings({"1100", "0011"}), 4);
  CHECK(binary_kernel(lin, Exec::Serial).size() == 4);
  // {0000, 1100, 1010, 0110} is linear; drop one word and add 1111.
  const auto nl = from_strings({"0000", "1100", "1010", "1111"});
  CHECK(binary_kernel(nl, Exec::Serial) == from_strings({"0000"}));
  std::mt19937_64 rng(10);
  for (int t = 0; t < 30; ++t) {
    auto code = random_code(rng, 8, 4);
    const auto base = span_of(code, 8);
    const auto k = binary_kernel(base, Exec::Serial);
    CHECK(k.size() == base.size());
    CHECK(binary_kernel(base, Exec::Parallel) == k);
    CHECK(binary_kernel_full_space(base, 8, Exec::Parallel) == k);
    code = random_code(rng, 8, 12);
    CHECK(binary_kernel_full_space(code, 8, Exec::Serial) == binary_kernel(code, Exec::Serial));
  }
}

TEST_CASE("failure counting is policy independent") {
  const auto odd = [](std::size_t i) { return i % 3 != 1; };
  CHECK(count_failures(1000, odd, Exec::Serial) == 333);
  CHECK(count_failures(1000, odd, Exec::Parallel) == 333);
  CHECK(first_failure(1000, odd, Exec::Serial) == 1);
  CHECK(first_failure(1000, odd, Exec::Parallel) == 1);
  const auto all = [](std::size_t) { return true; };
  CHECK_FALSE(first_failure(1000, all, Exec::Parallel).has_value());
}

TEST_CASE("pack32") {
  CHECK(pack32(BinaryVector::from_string("1011")) == 0b1101u);
}
