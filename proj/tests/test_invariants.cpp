#include <doctest.h>

#include "support.hpp"
#include "z2z4q8/gray.hpp"
#include "z2z4q8/invariants.hpp"
#include "z2z4q8/sampling.hpp"

using namespace testing;

namespace {

std::vector<CodeGroup> random_groups(std::size_t count, std::uint64_t seed, int max_n = 16) {
  std::vector<CodeGroup> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = job_rng(seed, i);
    out.push_back(random_subgroup(max_n, 256, rng));
  }
  return out;
}

std::set<BinaryVector> naive_kernel(const CodeGroup& c) {
  const auto img = gray_images(c);
  const std::set<BinaryVector> code(img.begin(), img.end());
  std::set<BinaryVector> k;
  for (const auto& z : code) {
    bool ok = true;
    for (const auto& v : code) ok = ok && code.contains(z + v);
    if (ok) k.insert(z);
  }
  return k;
}

}  // namespace

TEST_CASE("rank agrees with dense elimination") {
  for (const auto& c : random_groups(80, 31)) {
    std::vector<std::vector<int>> rows;
    for (const auto& v : gray_images(c)) rows.push_back(bits_of(v));
    const int r = naive_rank(rows);
    CHECK(rank_via_elimination(c) == r);
    CHECK(rank_via_span(c) == r);
  }
}

TEST_CASE("span group has order 2^rank and contains the code") {
  for (const auto& c : random_groups(30, 32)) {
    const auto d = span_group(c);
    CHECK(static_cast<int>(d.log2_order()) == rank_via_elimination(c));
    for (const auto& w : c.elements()) CHECK(d.contains(w));
  }
}

TEST_CASE("binary kernel agrees with a naive translation test") {
  for (const auto& c : random_groups(60, 33)) {
    const auto k = naive_kernel(c);
    const auto serial = binary_kernel(c, Exec::Serial);
    CHECK(std::set<BinaryVector>(serial.begin(), serial.end()) == k);
    CHECK(binary_kernel(c, Exec::Parallel) == serial);
    CHECK(std::is_sorted(serial.begin(), serial.end()));
  }
}

TEST_CASE("linearity, abelianness and weights by definition") {
  for (const auto& c : random_groups(60, 34)) {
    const auto img = gray_images(c);
    const std::set<BinaryVector> code(img.begin(), img.end());
    bool linear = true;
    for (const auto& x : code)
      for (const auto& y : code) linear = linear && code.contains(x + y);
    CHECK(is_linear(c) == linear);

    bool abelian = true;
    for (const auto& x : c.elements())
      for (const auto& y : c.elements()) abelian = abelian && mul(x, y) == mul(y, x);
    CHECK(is_abelian(c) == abelian);

    std::map<std::size_t, std::size_t> wd;
    for (const auto& v : img) ++wd[v.weight()];
    CHECK(weight_distribution(c) == wd);
  }
}

TEST_CASE("analyze_structure on the quaternion pair code") {
  const auto c = group(GroupSignature(0, 0, 2), {"a a", "ab b"});
  const auto s = analyze_structure(c);
  CHECK(s.order == 8);
  CHECK(s.type == CodeType{1, 0, 2});
  CHECK(s.rank == 4);
  CHECK(s.kernel_dim == 1);
  CHECK(s.h == 1);
  CHECK(s.m == 3);
  CHECK_FALSE(s.is_linear);
  CHECK_FALSE(s.is_abelian);
  CHECK(check_bounds(c, s).all_ok());
}

TEST_CASE("general bounds hold on random subgroups") {
  for (const auto& c : random_groups(150, 35, 20)) {
    CheckOptions serial;
    serial.exec = Exec::Serial;
    const auto s = analyze_structure(c, serial);
    const auto b = check_bounds(c, s, serial);
    for (const auto& chk : b.checks) {
      CAPTURE(chk.name);
      CAPTURE(c.signature().to_string());
      CHECK(chk.ok);
    }
    const auto p = analyze_structure(c);
    CHECK(p.rank == s.rank);
    CHECK(p.kernel_dim == s.kernel_dim);
  }
}

TEST_CASE("Z2Z4 kernel is the image of the group kernel") {
  // For abelian codes over Z2 x Z4 the binary kernel is exactly the Gray
  // image of K(C).
  for (std::size_t i = 0; i < 60; ++i) {
    auto rng = job_rng(36, i);
    const GroupSignature sig(static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4), 0);
    std::vector<GroupWord> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_word(sig, rng));
    const auto c = enumerate(sig, gens);
    const auto k = group_kernel(c);
    std::set<BinaryVector> kimg;
    for (const auto& w : k.elements()) kimg.insert(gray(w));
    CHECK(naive_kernel(c) == kimg);
  }
}

TEST_CASE("index plans") {
  const IndexPlan<2> full(5, true, 0, 1);
  CHECK(full.count() == 25);
  CHECK(full[7] == std::array<std::size_t, 2>{1, 2});
  const IndexPlan<3> sampled(100, false, 50, 9);
  CHECK(sampled.count() == 50);
  const IndexPlan<3> again(100, false, 50, 9);
  for (std::size_t i = 0; i < 50; ++i) CHECK(sampled[i] == again[i]);
}

TEST_CASE("binom2") {
  CHECK(binom2(0) == 0);
  CHECK(binom2(1) == 0);
  CHECK(binom2(4) == 6);
}
