#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "z2z4q8/invariants.hpp"
#include "z2z4q8/subgroup.hpp"

namespace z2z4q8 {

class NotHadamard : public std::invalid_argument {
 public:
  NotHadamard() : std::invalid_argument("not Hadamard") {}
};

/// n >= 2, |C| = 2n, e and u present, every other codeword of weight n/2.
[[nodiscard]] bool is_hadamard(const CodeGroup& c);

/// Standard generators in which at most two z_i square to u, such a pair has
/// commutator u, and equal-square pairs come first (u pair leading).
struct NormalizedGenSet {
  StandardGenSet gens;
  /// Number of pairs z_{2t-1}, z_{2t} with equal squares.
  int epsilon = 0;
};

/// Normalizes a standard generating set by the z1 z_i / z2 z_i / z1 z2 z_i
/// substitutions, then orders equal-square pairs first. Throws NotHadamard.
[[nodiscard]] NormalizedGenSet normalize_generators(const CodeGroup& c);

/// Reorders zs so equal-square pairs lead (u pair first) and returns their
/// count. Throws InvariantViolation if a square occurs three or more times
/// or two u-squared generators fail to have commutator u.
int order_equal_square_pairs(std::vector<GroupWord>& zs);

[[nodiscard]] bool is_normalized(const StandardGenSet& g);

struct Shape {
  /// 1 abelian; 2 z1^2 = z2^2 = (z1,z2) = u with Q8 core; 3 z1^2 = u outside
  /// the other squares; 4 rho = 2 with a non-u quaternion pair; 5 rho = 4
  /// with a u pair and a non-u pair.
  int tag = 0;
  NormalizedGenSet witness;
  /// Abstract group, e.g. "Z2 × (Z4^2 ⋊ Q8)".
  std::string structure;
  /// Substitutions applied while classifying, in order.
  std::vector<std::string> trail;
};

/// Runs the case analysis on a normalized generating set, substituting
/// generators until one of the five shapes holds, then verifies the shape's
/// relations and that the witness still generates C. Throws NotHadamard,
/// or InvariantViolation if no shape is reached.
[[nodiscard]] Shape classify_shape(const CodeGroup& c);

/// The defining relations of a shape, evaluated on a generating set.
[[nodiscard]] bool shape_relations_hold(int tag, const StandardGenSet& g);

[[nodiscard]] std::string shape_structure(int tag, const CodeType& t);

/// Largest rank of a Hadamard code of length 2^m over any shape.
[[nodiscard]] long long max_rank_for_length(int m);
/// Bound on r - (m + 1) for a shape at length 2^m.
[[nodiscard]] long long shape_rank_excess_bound(int tag, int m);
/// Shape 5 needs sigma >= 2 with sigma + 4 = m + 1, so m >= 5.
[[nodiscard]] bool shape_feasible(int tag, int m);

/// Length-dependent bounds, shape bounds, normalized-set facts and the
/// pair/triple facts about squares, commutators and swappers.
[[nodiscard]] BoundReport hadamard_bounds(const CodeGroup& c, const StructureReport& s, const Shape& shape,
                                          const CheckOptions& opt = {});
/// Facts about a normalized generating set: epsilon <= 2, its consequences,
/// the size of the span of squares and the rank excess bound.
[[nodiscard]] BoundReport normalized_set_bounds(const CodeGroup& c, const StructureReport& s,
                                                const NormalizedGenSet& g);
/// Pair and triple facts on C minus T(C); exhaustive up to the configured
/// orders, sampled above.
[[nodiscard]] BoundReport hadamard_pair_triple_checks(const CodeGroup& c, const CheckOptions& opt = {});

/// Codeword spheres of radius 1 partition Z2^n. Needs n <= 16.
[[nodiscard]] bool is_perfect(const std::vector<BinaryVector>& code, std::size_t n, Exec exec = Exec::Parallel);
[[nodiscard]] bool is_perfect(const CodeGroup& c, Exec exec = Exec::Parallel);
/// All weights even and the code punctured at the first coordinate is
/// perfect; with `any_position` every coordinate is tried.
[[nodiscard]] bool is_extended_perfect(const CodeGroup& c, bool any_position = false, Exec exec = Exec::Parallel);
[[nodiscard]] std::vector<BinaryVector> puncture(const std::vector<BinaryVector>& code, std::size_t position);

}  // namespace z2z4q8
