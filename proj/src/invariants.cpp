#include "z2z4q8/invariants.hpp"

#include <algorithm>

#include "z2z4q8/gray.hpp"
#include "z2z4q8/swapper.hpp"

namespace z2z4q8 {

std::vector<BinaryVector> gray_images(const CodeGroup& c) {
  std::vector<BinaryVector> out;
  out.reserve(c.order());
  for (const auto& w : c.elements()) out.push_back(gray(w));
  return out;
}

CodeGroup span_group(const CodeGroup& c, std::size_t max_order) {
  std::vector<GroupWord> gens = c.generators();
  const auto& g = c.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) gens.push_back(swapper(g[i], g[j]));
  return enumerate(c.signature(), gens, max_order);
}

int rank_via_span(const CodeGroup& c, std::size_t max_order) { return span_group(c, max_order).log2_order(); }

int rank_via_elimination(const CodeGroup& c) { return static_cast<int>(gf2_rank(gray_images(c))); }

std::vector<BinaryVector> binary_kernel(const CodeGroup& c, Exec exec) { return binary_kernel(gray_images(c), exec); }

bool is_linear(const CodeGroup& c) { return rank_via_elimination(c) == c.log2_order(); }

bool is_abelian(const CodeGroup& c) {
  const auto& g = c.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!commutator(g[i], g[j]).is_identity()) return false;
  return true;
}

std::map<std::size_t, std::size_t> weight_distribution(const CodeGroup& c) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& w : c.elements()) ++out[gray(w).weight()];
  return out;
}

StructureReport analyze_structure(const CodeGroup& c, const CheckOptions& opt) {
  StructureReport s;
  s.signature = c.signature();
  s.order = c.order();
  s.type = code_type(c);
  const auto n = static_cast<std::size_t>(c.signature().n());
  if (is_power_of_two(n)) s.m = log2_exact(n);

  const int r_span = rank_via_span(c, opt.max_order);
  const int r_elim = rank_via_elimination(c);
  if (r_span != r_elim)
    throw InvariantViolation("rank mismatch: span group gives " + std::to_string(r_span) + ", elimination gives " +
                             std::to_string(r_elim));
  s.rank = r_span;

  const CodeGroup k_group = group_kernel(c);
  std::vector<BinaryVector> from_group;
  for (const auto& w : k_group.elements()) from_group.push_back(gray(w));
  std::sort(from_group.begin(), from_group.end());
  const auto from_translation = binary_kernel(c, opt.exec);
  if (from_group != from_translation)
    throw InvariantViolation("kernel mismatch: swapper test gives 2^" + std::to_string(k_group.log2_order()) +
                             " words, translation test gives " + std::to_string(from_translation.size()));
  if (opt.full_kernel_check) {
    const auto full = binary_kernel_full_space(gray_images(c), n, opt.exec);
    if (full != from_translation) throw InvariantViolation("kernel mismatch between codeword and full-space search");
  }
  s.kernel_dim = k_group.log2_order();
  s.h = s.rank - (s.type.sigma + s.type.delta + s.type.rho);
  s.is_linear = s.rank == c.log2_order();
  s.is_abelian = is_abelian(c);
  s.weight_distribution = weight_distribution(c);
  return s;
}

namespace {

bool subset_of(const CodeGroup& a, const CodeGroup& b) {
  return std::all_of(a.elements().begin(), a.elements().end(), [&](const GroupWord& w) { return b.contains(w); });
}

// Bit 1 plane of an order <= 2 word: set at entries 2 (Z4) and a2 (Q8).
// Commutators only have such entries on Q8 coordinates.
std::vector<std::uint64_t> high_plane(const GroupWord& w) {
  const auto p = w.planes();
  const std::size_t words = p.size() / 3;
  return {p.begin() + static_cast<std::ptrdiff_t>(words), p.begin() + static_cast<std::ptrdiff_t>(2 * words)};
}

}  // namespace

BoundReport check_bounds(const CodeGroup& c, const StructureReport& s, const CheckOptions& opt) {
  BoundReport rep;
  const long long sg = s.type.sigma, dl = s.type.delta, rh = s.type.rho;
  const long long r = s.rank, k = s.kernel_dim, lg = c.log2_order(), l = c.signature().l();

  rep.add("nonlinear_rank_ge_kernel_plus_3", r, k + 3, s.is_linear || r >= k + 3);
  rep.add("nonlinear_order_gt_twice_kernel", lg, k + 2, s.is_linear || lg >= k + 2);
  rep.add("delta_le_sigma", dl, sg, dl <= sg);
  rep.add("sigma_le_kernel_dim", sg, k, sg <= k);
  rep.add("sigma_ge_delta_plus_min_1_rho", sg, dl + std::min(1LL, rh), sg >= dl + std::min(1LL, rh));
  rep.add("rank_le_order_kernel_bound", r, lg + binom2(lg - k), r <= lg + binom2(lg - k));
  const long long type_bound = sg + dl + rh + std::min(binom2(dl + rh), l - sg);
  rep.add("rank_le_type_bound", r, type_bound, r <= type_bound);
  rep.add("rank_ge_log_order", r, lg, r >= lg);

  const CodeGroup t = torsion(c);
  const CodeGroup z = center(c);
  const CodeGroup cc = commutator_subgroup(c);
  const CodeGroup kg = group_kernel(c);
  rep.add("commutator_subgroup_in_torsion", static_cast<long long>(cc.order()), static_cast<long long>(t.order()),
          subset_of(cc, t));
  rep.add("torsion_in_center", static_cast<long long>(t.order()), static_cast<long long>(z.order()), subset_of(t, z));
  rep.add("torsion_in_group_kernel", static_cast<long long>(t.order()), static_cast<long long>(kg.order()),
          subset_of(t, kg));

  const auto gens = standard_generators(c);
  rep.add("standard_generators_unique_products", has_unique_products(c, gens) ? 1 : 0, 1,
          has_unique_products(c, gens));

  std::vector<const GroupWord*> outside;
  for (const auto& w : c.elements())
    if (!t.contains(w)) outside.push_back(&w);
  const IndexPlan<2> plan(outside.size(), c.order() <= opt.exhaustive_pair_order, opt.samples, opt.seed);

  std::vector<GroupWord> sq;
  std::vector<std::vector<std::uint64_t>> sq_high;
  std::vector<int> sq_weight;
  sq.reserve(outside.size());
  for (const auto* w : outside) {
    sq.push_back(mul(*w, *w));
    sq_high.push_back(high_plane(sq.back()));
    sq_weight.push_back(gray(sq.back()).weight());
  }

  const auto commuting_equal_squares = [&](std::size_t i) {
    const auto [ia, ib] = plan[i];
    if (!(sq[ia] == sq[ib])) return true;
    const auto ab = mul(*outside[ia], *outside[ib]);
    if (!(ab == mul(*outside[ib], *outside[ia]))) return true;
    return mul(ab, ab).is_identity();
  };
  const auto commutator_matches_squares = [&](std::size_t i) {
    const auto [ia, ib] = plan[i];
    const auto cm = high_plane(commutator(*outside[ia], *outside[ib]));
    const auto &sa = sq_high[ia], &sb = sq_high[ib];
    for (std::size_t w = 0; w < cm.size(); ++w)
      if (cm[w] & ~(sa[w] & sb[w])) return false;
    return true;
  };
  const auto commutator_weight = [&](std::size_t i) {
    const auto [ia, ib] = plan[i];
    return gray(commutator(*outside[ia], *outside[ib])).weight() <= static_cast<std::size_t>(sq_weight[ia]);
  };
  const auto pair_check = [&](const char* name, const auto& pred) {
    const auto bad = static_cast<long long>(count_failures(plan.count(), pred, opt.exec));
    rep.add(name, bad, 0, bad == 0);
  };
  pair_check("commuting_equal_squares_product_in_torsion", commuting_equal_squares);
  pair_check("commutator_agrees_with_squares", commutator_matches_squares);
  pair_check("commutator_weight_le_square_weight", commutator_weight);
  return rep;
}

}  // namespace z2z4q8
