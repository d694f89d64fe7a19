#include <doctest.h>

#include "support.hpp"
#include "z2z4q8/sampling.hpp"
#include "z2z4q8/swapper.hpp"

using namespace testing;

namespace {

std::vector<CodeGroup> random_groups(std::size_t count, std::uint64_t seed) {
  std::vector<CodeGroup> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = job_rng(seed, i);
    out.push_back(random_subgroup(12, 256, rng));
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate matches a naive closure") {
  for (const auto& c : random_groups(60, 21)) {
    CHECK(as_set(c) == closure(c.signature(), c.generators()));
    CHECK(std::is_sorted(c.elements().begin(), c.elements().end()));
    CHECK(is_power_of_two(c.order()));
    CHECK((std::size_t{1} << c.log2_order()) == c.order());
  }
}

TEST_CASE("enumerate bounds the order") {
  const GroupSignature sig(0, 4, 0);
  CHECK_THROWS_AS(enumerate(sig, {word(sig, "1 0 0 0"), word(sig, "0 1 0 0"), word(sig, "0 0 1 0")}, 32), OrderOverflow);
  CHECK(enumerate(sig, {word(sig, "1 0 0 0"), word(sig, "0 1 0 0")}, 16).order() == 16);
  CHECK_THROWS_AS(enumerate(sig, {GroupWord::identity(GroupSignature(1, 0, 0))}), SignatureMismatch);
}

TEST_CASE("torsion, center and commutator subgroup by definition") {
  for (const auto& c : random_groups(60, 22)) {
    std::set<GroupWord> t, z, cc;
    for (const auto& x : c.elements()) {
      if (mul(x, x).is_identity()) t.insert(x);
      bool central = true;
      for (const auto& y : c.elements()) {
        central = central && mul(x, y) == mul(y, x);
        cc.insert(commutator(x, y));
      }
      if (central) z.insert(x);
    }
    CHECK(as_set(torsion(c)) == t);
    CHECK(as_set(center(c)) == z);
    CHECK(as_set(commutator_subgroup(c)) == closure(c.signature(), {cc.begin(), cc.end()}));
    CHECK(commutator_subgroup(c) == commutator_subgroup_all_pairs(c));
  }
}

TEST_CASE("group kernel by definition") {
  for (const auto& c : random_groups(60, 23)) {
    std::set<GroupWord> k;
    for (const auto& x : c.elements()) {
      bool in = true;
      for (const auto& y : c.elements()) in = in && c.contains(swapper(x, y));
      if (in) k.insert(x);
    }
    CHECK(as_set(group_kernel(c)) == k);
    CHECK(group_kernel(c) == group_kernel_all_pairs(c));
  }
}

TEST_CASE("type and standard generators") {
  for (const auto& c : random_groups(80, 24)) {
    const auto t = code_type(c);
    CHECK((std::size_t{1} << t.sigma) == torsion(c).order());
    CHECK((std::size_t{1} << (t.sigma + t.delta)) == center(c).order());
    CHECK((std::size_t{1} << (t.sigma + t.delta + t.rho)) == c.order());

    const auto g = standard_generators(c);
    CHECK(g.type() == t);
    CHECK(has_unique_products(c, g));
    for (const auto& x : g.xs) CHECK(mul(x, x).is_identity());
    CHECK(enumerate(c.signature(), g.all()) == c);
    CHECK(enumerate(c.signature(), g.xs) == torsion(c));
  }
}

TEST_CASE("has_unique_products rejects a bad set") {
  const GroupSignature sig(0, 2, 0);
  const auto c = group(sig, {"1 0", "0 1"});
  auto g = standard_generators(c);
  REQUIRE(g.type() == CodeType{2, 2, 0});
  g.ys[1] = g.ys[0];
  CHECK_FALSE(has_unique_products(c, g));
}

TEST_CASE("subgroup_from_elements") {
  const GroupSignature sig(0, 0, 1);
  const auto c = group(sig, {"a", "b"});
  CHECK(c.order() == 8);
  CHECK(subgroup_from_elements(sig, c.elements()) == c);
  CHECK_THROWS_AS(subgroup_from_elements(sig, {word(sig, "1"), word(sig, "a")}), std::logic_error);
}

TEST_CASE("quaternion pair code") {
  const GroupSignature sig(0, 0, 2);
  const auto c = group(sig, {"a a", "ab b"});
  CHECK(c.order() == 8);
  CHECK(code_type(c) == CodeType{1, 0, 2});
  CHECK(to_string(code_type(c)) == "(1,0,2)");
  CHECK(log2_exact(8) == 3);
  CHECK_THROWS(log2_exact(6));
}
