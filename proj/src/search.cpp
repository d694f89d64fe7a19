#include "z2z4q8/search.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "z2z4q8/hadamard.hpp"
#include "z2z4q8/invariants.hpp"

namespace z2z4q8 {

namespace {

struct Outcome {
  std::optional<SearchHit> hit;
  std::string error;
};

Outcome run_sample(const SearchOptions& opt, int m, std::size_t i) {
  Outcome out;
  try {
    auto rng = job_rng(opt.seed, i);
    SearchHit h;
    h.sample = i;
    h.found = random_hadamard(m, rng);
    h.shape = classify_shape(h.found.code).tag;
    if (opt.shape != 0 && h.shape != opt.shape) return out;
    CheckOptions co;
    co.exec = Exec::Serial;
    const auto s = analyze_structure(h.found.code, co);
    h.type = s.type;
    h.rank = s.rank;
    h.kernel_dim = s.kernel_dim;
    out.hit = std::move(h);
  } catch (const std::exception& e) {
    out.error = "sample " + std::to_string(i) + ": " + e.what();
  }
  return out;
}

}  // namespace

SearchResult search(const SearchOptions& opt) {
  if (opt.length < 2 || !is_power_of_two(static_cast<std::size_t>(opt.length)))
    throw std::invalid_argument("search length must be a power of two >= 2");
  if (opt.shape < 0 || opt.shape > 5) throw std::invalid_argument("shape must be 0 (any) or 1..5");
  const int m = log2_exact(static_cast<std::size_t>(opt.length));

  std::vector<Outcome> outcomes(opt.budget);
  const auto n = static_cast<std::ptrdiff_t>(opt.budget);
  if (opt.exec == Exec::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) outcomes[static_cast<std::size_t>(i)] = run_sample(opt, m, static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) outcomes[static_cast<std::size_t>(i)] = run_sample(opt, m, static_cast<std::size_t>(i));
  }

  SearchResult res;
  std::set<std::tuple<int, int, int, std::vector<GroupWord>>> seen;
  for (auto& o : outcomes) {
    if (!o.error.empty()) throw std::runtime_error(o.error);
    if (!o.hit) continue;
    auto& h = *o.hit;
    ++res.rank_kernel_counts[{h.rank, h.kernel_dim}];
    const auto& sig = h.found.code.signature();
    if (seen.emplace(sig.k1, sig.k2, sig.k3, h.found.code.elements()).second) res.hits.push_back(std::move(h));
  }
  return res;
}

}  // namespace z2z4q8
