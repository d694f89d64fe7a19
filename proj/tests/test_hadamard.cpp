#include <doctest.h>

#include "support.hpp"
#include "z2z4q8/fixtures.hpp"
#include "z2z4q8/gray.hpp"
#include "z2z4q8/hadamard.hpp"
#include "z2z4q8/invariants.hpp"
#include "z2z4q8/kernels.hpp"
#include "z2z4q8/sampling.hpp"

using namespace testing;

namespace {

bool naive_hadamard(const CodeGroup& c) {
  const auto n = static_cast<std::size_t>(c.signature().n());
  if (c.order() != 2 * n) return false;
  std::size_t full = 0;
  for (const auto& w : c.elements()) {
    const auto wt = gray(w).weight();
    if (wt == n) ++full;
    else if (wt != 0 && 2 * wt != n) return false;
  }
  return full == 1;
}

// Shape from which kinds of quaternion pairs occur among the elements:
// x^2 = y^2 = (x,y) = u, or x^2 = y^2 = (x,y) not in {e, u}.
int shape_by_pairs(const CodeGroup& c) {
  const auto u = GroupWord::u_element(c.signature());
  bool u_pair = false, other_pair = false, abelian = true;
  for (const auto& x : c.elements())
    for (const auto& y : c.elements()) {
      const auto cm = commutator(x, y);
      if (cm.is_identity()) continue;
      abelian = false;
      if (mul(x, x) == cm && mul(y, y) == cm) (cm == u ? u_pair : other_pair) = true;
    }
  if (abelian) return 1;
  if (u_pair) return other_pair ? 5 : 2;
  return other_pair ? 4 : 3;
}

std::vector<CodeGroup> hadamard_samples(std::size_t count, std::uint64_t seed, int max_m) {
  std::vector<CodeGroup> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = job_rng(seed, i);
    const int m = 1 + static_cast<int>(i % static_cast<std::size_t>(max_m));
    out.push_back(i % 2 ? random_quaternionic_hadamard(m, rng).code : random_hadamard(m, rng).code);
  }
  return out;
}

}  // namespace

TEST_CASE("hadamard test by definition") {
  for (const auto& f : fixtures()) {
    const auto c = fixture_group(f.name);
    CAPTURE(f.name);
    CHECK(is_hadamard(c) == naive_hadamard(c));
  }
  for (const auto& c : hadamard_samples(40, 41, 5)) CHECK(naive_hadamard(c));
  const auto not_h = group(GroupSignature(0, 2, 0), {"1 0"});
  CHECK_FALSE(is_hadamard(not_h));
  CHECK_THROWS_AS(normalize_generators(not_h), NotHadamard);
}

TEST_CASE("fixture shapes") {
  CHECK(classify_shape(fixture_group("q8x4_hadamard_rank7")).tag == 2);
  CHECK(classify_shape(fixture_group("q8x8_hadamard_shape5")).tag == 5);
  CHECK(classify_shape(fixture_group("z2x4_q8_linear_shape4")).tag == 4);
  CHECK(classify_shape(fixture_group("z2x8_q8x2_shape4_rank6")).tag == 4);
  CHECK(classify_shape(fixture_group("z4x4_hadamard_len8")).tag == 1);
}

TEST_CASE("shape classification agrees with pair counting") {
  std::map<int, int> seen;
  for (const auto& c : hadamard_samples(120, 42, 5)) {
    const auto sh = classify_shape(c);
    CAPTURE(c.signature().to_string());
    CHECK(sh.tag == shape_by_pairs(c));
    CHECK(shape_relations_hold(sh.tag, sh.witness.gens));
    CHECK(enumerate(c.signature(), sh.witness.gens.all()) == c);
    ++seen[sh.tag];
  }
  for (const auto& f : fixtures()) {
    const auto c = fixture_group(f.name);
    if (is_hadamard(c)) {
      CAPTURE(f.name);
      CHECK(classify_shape(c).tag == shape_by_pairs(c));
    }
  }
  CHECK(seen.size() >= 3);
}

TEST_CASE("normalized generators") {
  for (const auto& c : hadamard_samples(60, 43, 5)) {
    const auto g = normalize_generators(c);
    CHECK(is_normalized(g.gens));
    CHECK(has_unique_products(c, g.gens));
    CHECK(g.epsilon <= 2);
    const auto u = GroupWord::u_element(c.signature());
    int u_squares = 0;
    for (const auto& z : g.gens.zs) u_squares += mul(z, z) == u ? 1 : 0;
    CHECK(u_squares <= 2);
  }
}

TEST_CASE("hadamard bounds hold on sampled codes") {
  CheckOptions opt;
  opt.exhaustive_pair_order = 256;
  opt.exhaustive_triple_order = 64;
  opt.samples = 3000;
  for (const auto& c : hadamard_samples(80, 44, 6)) {
    const auto s = analyze_structure(c, opt);
    const auto sh = classify_shape(c);
    const auto b = hadamard_bounds(c, s, sh, opt);
    for (const auto& chk : b.checks) {
      CAPTURE(chk.name);
      CAPTURE(c.signature().to_string());
      CHECK(chk.ok);
    }
  }
}

TEST_CASE("shape structure strings") {
  CHECK(shape_structure(2, {2, 0, 3}) == "(Z4 ⋊ Q8)");
  CHECK(shape_structure(2, {4, 0, 4}) == "Z2 × (Z4^2 ⋊ Q8)");
  CHECK(shape_structure(3, {3, 0, 3}) == "(Z4^2 ⋊ Z4)");
  CHECK(shape_structure(1, {3, 2, 0}) == "Z2 × Z4^2");
  CHECK(shape_structure(4, {1, 0, 2}) == "Q8");
  CHECK(shape_structure(5, {2, 0, 4}) == "(Q8 ⋊ Q8)");
}

TEST_CASE("rank limits by length") {
  CHECK(max_rank_for_length(4) == 7);
  CHECK(max_rank_for_length(5) == 9);
  CHECK_FALSE(shape_feasible(5, 4));
  CHECK(shape_feasible(5, 5));
  CHECK(shape_rank_excess_bound(1, 4) >= 0);
}

TEST_CASE("perfect codes") {
  CHECK(is_perfect(fixture_group("z2x3_q8_perfect")));
  CHECK(is_perfect(fixture_group("z2x3_q8_perfect"), Exec::Serial));
  for (const char* name : {"z2x4_q8_extended_perfect", "z4x2_q8_extended_perfect", "q8x2_extended_perfect"})
    CHECK(is_extended_perfect(fixture_group(name), true));
  const auto rep = fixture_group("q8_repetition");
  CHECK(is_extended_perfect(rep, true));
  CHECK_FALSE(is_perfect(rep));
  CHECK(puncture(gray_images(rep), 0).front().size() == 3);
}
