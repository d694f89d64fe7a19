// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "z2z4q8/constructions.hpp"
#include "z2z4q8/fixtures.hpp"
#include "z2z4q8/hadamard.hpp"
#include "z2z4q8/invariants.hpp"
#include "z2z4q8/kernels.hpp"
#include "z2z4q8/sampling.hpp"
#include "z2z4q8/search.hpp"

namespace {

using namespace z2z4q8;

// Kronecker doublings of the length-16 rank-7 code: length 16 << doublings.
const CodeGroup& doubled_code(int doublings) {
  static std::vector<CodeGroup> cache{fixture_group("q8x4_hadamard_rank7")};
  while (static_cast<int>(cache.size()) <= doublings) cache.push_back(kronecker(cache.back()).output);
  return cache[static_cast<std::size_t>(doublings)];
}

Exec policy(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_BinaryKernel(benchmark::State& s) {
  const auto img = gray_images(doubled_code(static_cast<int>(s.range(1))));
  for (auto _ : s) benchmark::DoNotOptimize(binary_kernel(img, policy(s)));
  label(s);
}

void BM_BinaryKernelFullSpace(benchmark::State& s) {
  const auto img = gray_images(doubled_code(0));
  for (auto _ : s) benchmark::DoNotOptimize(binary_kernel_full_space(img, 16, policy(s)));
  label(s);
}

void BM_CoveringRadius(benchmark::State& s) {
  const auto img = gray_images(doubled_code(0));
  for (auto _ : s) benchmark::DoNotOptimize(covering_radius(img, 16, policy(s)));
  label(s);
}

void BM_PairTripleChecks(benchmark::State& s) {
  const auto& c = doubled_code(static_cast<int>(s.range(1)));
  CheckOptions opt;
  opt.exec = policy(s);
  for (auto _ : s) benchmark::DoNotOptimize(hadamard_pair_triple_checks(c, opt));
  label(s);
}

void BM_GeneralBounds(benchmark::State& s) {
  const auto& c = doubled_code(static_cast<int>(s.range(1)));
  CheckOptions opt;
  opt.exec = policy(s);
  const auto st = analyze_structure(c, opt);
  for (auto _ : s) benchmark::DoNotOptimize(check_bounds(c, st, opt));
  label(s);
}

void BM_Search(benchmark::State& s) {
  SearchOptions opt;
  opt.length = 16;
  opt.budget = 200;
  opt.exec = policy(s);
  for (auto _ : s) benchmark::DoNotOptimize(search(opt));
  label(s);
}

}  // namespace

BENCHMARK(BM_BinaryKernel)->ArgsProduct({{0, 1}, {1, 2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BinaryKernelFullSpace)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoveringRadius)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairTripleChecks)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneralBounds)->ArgsProduct({{0, 1}, {1, 2}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
