#include "z2z4q8/subgroup.hpp"

#include <algorithm>
#include <bit>

#include "z2z4q8/binary.hpp"
#include "z2z4q8/gray.hpp"
#include "z2z4q8/swapper.hpp"

namespace z2z4q8 {

bool is_power_of_two(std::size_t v) noexcept { return v != 0 && (v & (v - 1)) == 0; }

int log2_exact(std::size_t v) {
  if (!is_power_of_two(v)) throw std::logic_error("expected a power of two, got " + std::to_string(v));
  return std::countr_zero(v);
}

int CodeGroup::log2_order() const noexcept { return std::countr_zero(elements_.size()); }

CodeGroup enumerate(const GroupSignature& sig, const std::vector<GroupWord>& generators, std::size_t max_order) {
  CodeGroup g;
  g.sig_ = sig;
  for (const auto& w : generators) {
    if (!(w.signature() == sig)) throw SignatureMismatch(sig, w.signature());
    if (!w.is_identity() && std::find(g.generators_.begin(), g.generators_.end(), w) == g.generators_.end())
      g.generators_.push_back(w);
  }

  std::vector<GroupWord> queue;
  const auto e = GroupWord::identity(sig);
  g.index_.insert(e);
  queue.push_back(e);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& gen : g.generators_) {
      GroupWord y = mul(queue[i], gen);
      if (g.index_.insert(y).second) {
        if (g.index_.size() > max_order) throw OrderOverflow(max_order);
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  g.elements_ = std::move(queue);
  if (!is_power_of_two(g.elements_.size()))
    throw std::logic_error("enumerated subgroup has order " + std::to_string(g.elements_.size()) + ", not a power of 2");
  return g;
}

CodeGroup subgroup_from_elements(const GroupSignature& sig, std::vector<GroupWord> elements) {
  std::sort(elements.begin(), elements.end());
  std::vector<GroupWord> gens;
  CodeGroup h = enumerate(sig, gens);
  for (const auto& w : elements) {
    if (h.contains(w)) continue;
    gens.push_back(w);
    try {
      h = enumerate(sig, gens, elements.size());
    } catch (const OrderOverflow&) {
      throw std::logic_error("element set is not a subgroup");
    }
  }
  if (h.elements() != elements) throw std::logic_error("element set is not a subgroup");
  return h;
}

CodeGroup torsion(const CodeGroup& c) {
  std::vector<GroupWord> t;
  for (const auto& w : c.elements())
    if (mul(w, w).is_identity()) t.push_back(w);
  return subgroup_from_elements(c.signature(), std::move(t));
}

CodeGroup center(const CodeGroup& c) {
  std::vector<GroupWord> z;
  for (const auto& w : c.elements()) {
    const bool central = std::all_of(c.generators().begin(), c.generators().end(),
                                     [&](const GroupWord& g) { return mul(w, g) == mul(g, w); });
    if (central) z.push_back(w);
  }
  return subgroup_from_elements(c.signature(), std::move(z));
}

CodeGroup commutator_subgroup(const CodeGroup& c) {
  std::vector<GroupWord> comms;
  const auto& g = c.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) comms.push_back(commutator(g[i], g[j]));
  return enumerate(c.signature(), comms);
}

CodeGroup commutator_subgroup_all_pairs(const CodeGroup& c) {
  std::unordered_set<GroupWord, GroupWordHash> comms;
  for (const auto& x : c.elements())
    for (const auto& y : c.elements()) comms.insert(commutator(x, y));
  return enumerate(c.signature(), std::vector<GroupWord>(comms.begin(), comms.end()));
}

CodeType code_type(const CodeGroup& c) {
  const int t = torsion(c).log2_order();
  const int z = center(c).log2_order();
  return {t, z - t, c.log2_order() - z};
}

std::string to_string(const CodeType& t) {
  return "(" + std::to_string(t.sigma) + "," + std::to_string(t.delta) + "," + std::to_string(t.rho) + ")";
}

std::vector<GroupWord> StandardGenSet::all() const {
  std::vector<GroupWord> out = xs;
  out.insert(out.end(), ys.begin(), ys.end());
  out.insert(out.end(), zs.begin(), zs.end());
  return out;
}

namespace {

// <H, g> = H u gH when H contains C' (so is normal) and g^2 lies in H.
void extend_by_coset(std::unordered_set<GroupWord, GroupWordHash>& h, const GroupWord& g) {
  std::vector<GroupWord> coset;
  coset.reserve(h.size());
  for (const auto& w : h) coset.push_back(mul(g, w));
  for (auto& w : coset) h.insert(std::move(w));
}

}  // namespace

StandardGenSet standard_generators(const CodeGroup& c) {
  StandardGenSet out;
  const auto& sig = c.signature();
  const CodeGroup t = torsion(c);
  const CodeGroup z = center(c);

  Gf2Basis basis(static_cast<std::size_t>(sig.n()));
  for (const auto& w : t.elements()) {
    if (basis.insert(gray(w))) out.xs.push_back(w);
    if (static_cast<int>(out.xs.size()) == t.log2_order()) break;
  }

  std::unordered_set<GroupWord, GroupWordHash> h(t.elements().begin(), t.elements().end());
  for (const auto& w : z.elements()) {
    if (h.contains(w)) continue;
    out.ys.push_back(w);
    extend_by_coset(h, w);
  }
  for (const auto& w : c.elements()) {
    if (h.contains(w)) continue;
    out.zs.push_back(w);
    extend_by_coset(h, w);
  }
  if (h.size() != c.order()) throw std::logic_error("standard generating set does not exhaust the group");
  return out;
}

bool has_unique_products(const CodeGroup& c, const StandardGenSet& gens) {
  const std::size_t s = gens.xs.size(), d = gens.ys.size(), r = gens.zs.size();
  const std::size_t bits = s + d + r;
  if (bits >= 63 || (std::size_t{1} << bits) != c.order()) return false;
  const CodeGroup t = torsion(c);
  const CodeGroup z = center(c);
  const auto all = gens.all();
  std::unordered_set<GroupWord, GroupWordHash> seen;
  for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
    GroupWord p = GroupWord::identity(c.signature());
    for (std::size_t i = 0; i < bits; ++i)
      if ((mask >> i) & 1) p = mul(p, all[i]);
    if (!c.contains(p) || !seen.insert(p).second) return false;
    const bool no_y = ((mask >> s) & ((std::size_t{1} << d) - 1)) == 0;
    const bool no_z = (mask >> (s + d)) == 0;
    if (t.contains(p) != (no_y && no_z)) return false;
    if (z.contains(p) != no_z) return false;
  }
  return seen.size() == c.order();
}

CodeGroup group_kernel(const CodeGroup& c) {
  std::vector<GroupWord> k;
  for (const auto& x : c.elements()) {
    const bool ok = std::all_of(c.generators().begin(), c.generators().end(),
                                [&](const GroupWord& g) { return c.contains(swapper(x, g)); });
    if (ok) k.push_back(x);
  }
  return subgroup_from_elements(c.signature(), std::move(k));
}

CodeGroup group_kernel_all_pairs(const CodeGroup& c) {
  std::vector<GroupWord> k;
  for (const auto& x : c.elements()) {
    const bool ok = std::all_of(c.elements().begin(), c.elements().end(),
                                [&](const GroupWord& y) { return c.contains(swapper(x, y)); });
    if (ok) k.push_back(x);
  }
  return subgroup_from_elements(c.signature(), std::move(k));
}

}  // namespace z2z4q8
