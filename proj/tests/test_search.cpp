#include <doctest.h>

#include "support.hpp"
#include "z2z4q8/hadamard.hpp"
#include "z2z4q8/sampling.hpp"
#include "z2z4q8/search.hpp"

using namespace testing;

namespace {

std::vector<std::pair<std::size_t, std::vector<GroupWord>>> digest(const SearchResult& r) {
  std::vector<std::pair<std::size_t, std::vector<GroupWord>>> out;
  for (const auto& h : r.hits) out.emplace_back(h.sample, h.found.code.elements());
  return out;
}

}  // namespace

TEST_CASE("job streams depend only on seed and index") {
  auto a = job_rng(9, 3), b = job_rng(9, 3), c = job_rng(9, 4), d = job_rng(10, 3);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(x != d());
}

TEST_CASE("search is deterministic and policy independent") {
  SearchOptions opt;
  opt.length = 16;
  opt.budget = 150;
  opt.seed = 3;
  opt.exec = Exec::Serial;
  const auto serial = search(opt);
  opt.exec = Exec::Parallel;
  const auto parallel = search(opt);
  CHECK(digest(serial) == digest(parallel));
  CHECK(serial.rank_kernel_counts == parallel.rank_kernel_counts);
  CHECK(digest(search(opt)) == digest(parallel));
  opt.seed = 4;
  CHECK(digest(search(opt)) != digest(parallel));
}

TEST_CASE("search hits have the requested length and shape") {
  SearchOptions opt;
  opt.length = 16;
  opt.budget = 200;
  opt.shape = 2;
  const auto res = search(opt);
  std::size_t counted = 0;
  for (const auto& [rk, n] : res.rank_kernel_counts) counted += n;
  CHECK(counted >= res.hits.size());
  for (const auto& h : res.hits) {
    CHECK(h.found.code.signature().n() == 16);
    CHECK(h.shape == 2);
    CHECK(is_hadamard(h.found.code));
    CHECK(h.rank <= 7);
    CHECK_FALSE(h.found.recipe.empty());
  }
}

TEST_CASE("search rejects bad arguments") {
  SearchOptions opt;
  opt.length = 12;
  CHECK_THROWS_AS(search(opt), std::invalid_argument);
  opt.length = 16;
  opt.shape = 6;
  CHECK_THROWS_AS(search(opt), std::invalid_argument);
}

TEST_CASE("random hadamard samples have the requested length") {
  for (std::size_t i = 0; i < 40; ++i) {
    auto rng = job_rng(61, i);
    const int m = 1 + static_cast<int>(i % 5);
    const auto s = random_hadamard(m, rng);
    CHECK(s.code.signature().n() == (1 << m));
    CHECK(is_hadamard(s.code));
    if (m >= 2) {
      auto rng2 = job_rng(62, i);
      CHECK(random_quaternionic_hadamard(m, rng2).code.signature().k3 > 0);
    }
  }
}
