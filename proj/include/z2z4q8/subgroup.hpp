#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "z2z4q8/group.hpp"

namespace z2z4q8 {

inline constexpr std::size_t kDefaultMaxOrder = std::size_t{1} << 20;

class OrderOverflow : public std::runtime_error {
 public:
  explicit OrderOverflow(std::size_t bound)
      : std::runtime_error("subgroup order exceeds the bound " + std::to_string(bound) + " (raise --max-order)"),
        bound_(bound) {}
  [[nodiscard]] std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

/// Fully enumerated subgroup of Z2^k1 x Z4^k2 x Q8^k3.
///
/// Elements are kept sorted (coordinate-lexicographic), which fixes the
/// iteration order used by every greedy choice downstream.
class CodeGroup {
 public:
  CodeGroup() = default;

  [[nodiscard]] const GroupSignature& signature() const noexcept { return sig_; }
  [[nodiscard]] const std::vector<GroupWord>& elements() const noexcept { return elements_; }
  [[nodiscard]] const std::vector<GroupWord>& generators() const noexcept { return generators_; }
  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  /// log2 of the order.
  [[nodiscard]] int log2_order() const noexcept;
  [[nodiscard]] bool contains(const GroupWord& w) const { return index_.contains(w); }

  friend bool operator==(const CodeGroup& a, const CodeGroup& b) { return a.sig_ == b.sig_ && a.elements_ == b.elements_; }

 private:
  friend CodeGroup enumerate(const GroupSignature&, const std::vector<GroupWord>&, std::size_t);

  GroupSignature sig_;
  std::vector<GroupWord> elements_;
  std::vector<GroupWord> generators_;
  std::unordered_set<GroupWord, GroupWordHash> index_;
};

/// Smallest subgroup containing `generators`.
///
/// Throws OrderOverflow once more than `max_order` elements are found, and
/// SignatureMismatch if a generator has a different signature.
[[nodiscard]] CodeGroup enumerate(const GroupSignature& sig, const std::vector<GroupWord>& generators,
                                  std::size_t max_order = kDefaultMaxOrder);

/// Subgroup with the given element set, with generators picked greedily in
/// sorted order. Throws std::logic_error if `elements` is not a subgroup.
[[nodiscard]] CodeGroup subgroup_from_elements(const GroupSignature& sig, std::vector<GroupWord> elements);

/// T(C) = { z in C : z^2 = e }.
[[nodiscard]] CodeGroup torsion(const CodeGroup& c);
[[nodiscard]] CodeGroup center(const CodeGroup& c);
/// Generated by the commutators of generator pairs. Commutators are central
/// and bimultiplicative in these groups, so this is the full C'.
[[nodiscard]] CodeGroup commutator_subgroup(const CodeGroup& c);
/// Reference version built from all |C|^2 element commutators.
[[nodiscard]] CodeGroup commutator_subgroup_all_pairs(const CodeGroup& c);

struct CodeType {
  int sigma = 0;  ///< log2 |T(C)|
  int delta = 0;  ///< log2 [Z(C) : T(C)]
  int rho = 0;    ///< log2 [C : Z(C)]

  friend bool operator==(const CodeType&, const CodeType&) = default;
};

[[nodiscard]] CodeType code_type(const CodeGroup& c);
[[nodiscard]] std::string to_string(const CodeType& t);

/// x_1..x_sigma; y_1..y_delta; z_1..z_rho with T(C) = <xs> elementary
/// abelian, Z(C) = <xs, ys>, C = <xs, ys, zs>.
struct StandardGenSet {
  std::vector<GroupWord> xs;
  std::vector<GroupWord> ys;
  std::vector<GroupWord> zs;

  [[nodiscard]] std::vector<GroupWord> all() const;
  [[nodiscard]] CodeType type() const {
    return {static_cast<int>(xs.size()), static_cast<int>(ys.size()), static_cast<int>(zs.size())};
  }
};

/// Deterministic standard generating set: xs is the first GF(2)-independent
/// run of torsion elements (through their Gray images), ys and zs are the
/// first elements of Z(C) and C outside the subgroup built so far.
[[nodiscard]] StandardGenSet standard_generators(const CodeGroup& c);

/// True iff the 2^(sigma+delta+rho) ordered products prod x^a prod y^b prod z^g
/// are pairwise distinct, exhaust C, and land in T (resp. Z) exactly when all
/// y/z (resp. z) exponents vanish.
[[nodiscard]] bool has_unique_products(const CodeGroup& c, const StandardGenSet& gens);

/// K(C) = { x in C : [x, y] in C for every y in C }, testing y over the
/// generators only (the swapper is multiplicative in each slot).
[[nodiscard]] CodeGroup group_kernel(const CodeGroup& c);
/// Reference version testing every y in C.
[[nodiscard]] CodeGroup group_kernel_all_pairs(const CodeGroup& c);

[[nodiscard]] bool is_power_of_two(std::size_t v) noexcept;
[[nodiscard]] int log2_exact(std::size_t v);

}  // namespace z2z4q8
