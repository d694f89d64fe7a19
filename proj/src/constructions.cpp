#include "z2z4q8/constructions.hpp"

#include <algorithm>

#include "z2z4q8/gray.hpp"
#include "z2z4q8/hadamard.hpp"
#include "z2z4q8/invariants.hpp"

namespace z2z4q8 {

GroupWord xi_lift(const GroupWord& w) {
  const auto& sig = w.signature();
  if (sig.k3 != 0) throw ConstructionError("xi lift needs a Z2Z4 signature (k3 = 0), got " + sig.to_string());
  const GroupSignature out(0, sig.k1, sig.k2);
  auto codes = w.codes();
  for (int i = 0; i < sig.k1; ++i) codes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(2 * codes[static_cast<std::size_t>(i)]);
  // Z4 value i becomes a^i, whose code is i as well.
  return GroupWord::from_codes(out, codes);
}

CodeGroup xi_lift(const CodeGroup& c) {
  std::vector<GroupWord> gens;
  for (const auto& g : c.generators()) gens.push_back(xi_lift(g));
  const GroupSignature out(0, c.signature().k1, c.signature().k2);
  auto lifted = enumerate(out, gens, 2 * c.order());
  if (lifted.order() != c.order()) throw InvariantViolation("xi lift changed the order");
  return lifted;
}

GroupWord xi_unlift(const GroupWord& w) {
  const auto& sig = w.signature();
  if (sig.k1 != 0) throw ConstructionError("xi inverse needs a Z4Q8 signature (k1 = 0), got " + sig.to_string());
  auto codes = w.codes();
  for (int i = 0; i < sig.l(); ++i) {
    auto& v = codes[static_cast<std::size_t>(i)];
    if (i < sig.k2) {
      if (v % 2) throw ConstructionError("Z4 coordinate " + std::to_string(i + 1) + " is odd, outside the lift image");
      v = static_cast<std::uint8_t>(v / 2);
    } else if (q8::b_exp(v)) {
      throw ConstructionError("Q8 coordinate " + std::to_string(i + 1) + " is outside <a>");
    }
  }
  return GroupWord::from_codes(GroupSignature(sig.k2, sig.k3, 0), codes);
}

bool normalizes(const CodeGroup& c, const GroupWord& x) {
  return std::all_of(c.generators().begin(), c.generators().end(),
                     [&](const GroupWord& g) { return c.contains(conjugate(g, x)); });
}

std::optional<GroupWord> extension_condition_witness(const CodeGroup& cq, const GroupWord& x) {
  const auto n = static_cast<std::size_t>(cq.signature().n());
  for (const auto& c : cq.elements())
    if (2 * gray(mul(x, c)).weight() != n) return c;
  return std::nullopt;
}

namespace {

void check_extension(const CodeGroup& cq, const GroupWord& x, const char* what) {
  if (!(x.signature() == cq.signature())) throw SignatureMismatch(cq.signature(), x.signature());
  if (!cq.contains(mul(x, x))) throw ConstructionError(std::string(what) + ": x^2 is not in the code");
  if (!normalizes(cq, x)) throw ConstructionError(std::string(what) + ": x does not normalize the code");
}

}  // namespace

CodeGroup extend(const CodeGroup& cq, const GroupWord& x) {
  check_extension(cq, x, "extend");
  if (const auto bad = extension_condition_witness(cq, x))
    throw ConstructionError("extend: wt(Phi(x c)) != n/2 for c = (" + to_string(*bad) + ")");
  auto gens = cq.generators();
  gens.push_back(x);
  return enumerate(cq.signature(), gens, 2 * cq.order());
}

LiftResult lift_and_extend(const CodeGroup& base, const GroupWord& x) {
  LiftResult r;
  r.lifted = xi_lift(base);
  r.x = x;
  check_extension(r.lifted, x, "extend");
  r.condition_ok = !extension_condition_witness(r.lifted, x).has_value();
  auto gens = r.lifted.generators();
  gens.push_back(x);
  r.extended = enumerate(r.lifted.signature(), gens, 2 * r.lifted.order());
  return r;
}

GroupWord random_outside_a(const GroupSignature& sig, std::mt19937_64& rng) {
  std::vector<std::uint8_t> codes(static_cast<std::size_t>(sig.l()), 0);
  std::uniform_int_distribution<int> bit(0, 1), four(0, 3);
  for (int i = 0; i < sig.l(); ++i) {
    auto& v = codes[static_cast<std::size_t>(i)];
    switch (sig.factor(i)) {
      case GroupSignature::Factor::Z2: v = static_cast<std::uint8_t>(bit(rng)); break;
      case GroupSignature::Factor::Z4: v = static_cast<std::uint8_t>(2 * bit(rng) + 1); break;
      case GroupSignature::Factor::Q8: v = static_cast<std::uint8_t>(4 + four(rng)); break;
    }
  }
  return GroupWord::from_codes(sig, codes);
}

GroupSignature doubled(const GroupSignature& sig) { return {2 * sig.k1, 2 * sig.k2, 2 * sig.k3}; }

GroupWord pair_word(const GroupWord& a, const GroupWord& b) {
  const auto& sig = a.signature();
  if (!(sig == b.signature())) throw SignatureMismatch(sig, b.signature());
  const auto ca = a.codes(), cb = b.codes();
  std::vector<std::uint8_t> out;
  out.reserve(2 * ca.size());
  const int blocks[4] = {0, sig.k1, sig.k1 + sig.k2, sig.l()};
  for (int blk = 0; blk < 3; ++blk) {
    out.insert(out.end(), ca.begin() + blocks[blk], ca.begin() + blocks[blk + 1]);
    out.insert(out.end(), cb.begin() + blocks[blk], cb.begin() + blocks[blk + 1]);
  }
  return GroupWord::from_codes(doubled(sig), out);
}

CodeType predict_kronecker_type(const CodeGroup& c, const GroupWord& g) {
  const CodeType t = code_type(c);
  bool small_in_coset = false;
  bool central_in_coset = false;
  std::vector<GroupWord> gens = c.generators();
  gens.push_back(g);
  for (const auto& x : c.elements()) {
    const auto gx = mul(g, x);
    if (mul(gx, gx).is_identity()) small_in_coset = true;
    if (std::all_of(gens.begin(), gens.end(), [&](const GroupWord& h) { return mul(gx, h) == mul(h, gx); }))
      central_in_coset = true;
  }
  if (small_in_coset) return {t.sigma + 1, t.delta, t.rho};
  if (central_in_coset) return {t.sigma, t.delta + 1, t.rho};
  const CodeGroup z = center(c);
  std::size_t centralizer = 0;
  for (const auto& x : z.elements())
    if (mul(x, g) == mul(g, x)) ++centralizer;
  const int d1 = log2_exact(centralizer) - t.sigma;
  return {t.sigma, d1, t.rho + t.delta - d1 + 1};
}

KroneckerResult generalized_kronecker(const CodeGroup& c, const GroupWord& g) {
  if (!(g.signature() == c.signature())) throw SignatureMismatch(c.signature(), g.signature());
  if (!c.contains(mul(g, g))) throw ConstructionError("kronecker: g^2 is not in the code");
  if (!normalizes(c, g)) throw ConstructionError("kronecker: g does not normalize the code");
  KroneckerResult r;
  r.input = c;
  r.g = g;
  std::vector<GroupWord> gens;
  for (const auto& x : c.generators()) gens.push_back(pair_word(x, x));
  gens.push_back(pair_word(g, mul(g, GroupWord::u_element(c.signature()))));
  r.output = enumerate(doubled(c.signature()), gens, 2 * c.order());
  if (r.output.order() != 2 * c.order()) throw InvariantViolation("kronecker output does not double the order");
  r.predicted_type = predict_kronecker_type(c, g);
  const CodeType actual = code_type(r.output);
  if (!(actual == r.predicted_type))
    throw InvariantViolation("kronecker type " + to_string(actual) + " differs from predicted " +
                             to_string(r.predicted_type));
  return r;
}

KroneckerResult kronecker(const CodeGroup& c) { return generalized_kronecker(c, GroupWord::identity(c.signature())); }

const std::vector<Q8BitAutomorphism>& q8_bit_automorphisms() {
  static const std::vector<Q8BitAutomorphism> all = [] {
    std::vector<Q8BitAutomorphism> out;
    std::array<int, 4> p = {0, 1, 2, 3};
    std::array<std::uint8_t, 16> from_bits{};
    std::array<bool, 16> is_image{};
    for (std::uint8_t x = 0; x < 8; ++x) {
      from_bits[gray_q8(x)] = x;
      is_image[gray_q8(x)] = true;
    }
    do {
      Q8BitAutomorphism a;
      a.p = p;
      for (std::uint8_t x = 0; x < 8; ++x) {
        const auto bits = gray_q8(x);
        std::uint8_t moved = 0;
        // Bit 3 is the first Gray coordinate.
        for (int k = 0; k < 4; ++k)
          if ((bits >> (3 - p[static_cast<std::size_t>(k)])) & 1) moved = static_cast<std::uint8_t>(moved | (1 << (3 - k)));
        a.map[x] = is_image[moved] ? from_bits[moved] : 0xff;
      }
      bool hom = std::none_of(a.map.begin(), a.map.end(), [](auto v) { return v == 0xff; });
      for (std::uint8_t x = 0; hom && x < 8; ++x)
        for (std::uint8_t y = 0; hom && y < 8; ++y) hom = a.map[q8::mul(x, y)] == q8::mul(a.map[x], a.map[y]);
      if (hom) out.push_back(a);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return all;
}

ConverseResult structural_converse_check(const CodeGroup& c) {
  const Shape shape = classify_shape(c);
  if (shape.tag != 2 && shape.tag != 3) throw ConstructionError("converse applies to shapes 2 and 3 only");
  const auto& sig = c.signature();
  if (sig.k1 != 0) throw InvariantViolation("shape 2/3 code with binary coordinates");
  const auto& g = shape.witness.gens;
  const auto& z = g.zs;

  std::vector<GroupWord> sub = g.xs;
  if (shape.tag == 2) {
    sub.push_back(mul(z[0], z[1]));
    sub.insert(sub.end(), z.begin() + 2, z.end());
  } else {
    sub.insert(sub.end(), z.begin() + 1, z.end());
  }
  const CodeGroup half = enumerate(sig, sub);
  if (2 * half.order() != c.order() || !is_abelian(half))
    throw InvariantViolation("index-2 subgroup is not abelian of index 2");

  // Per-coordinate automorphism moving the projection into <a>.
  const auto& autos = q8_bit_automorphisms();
  std::vector<const Q8BitAutomorphism*> chosen(static_cast<std::size_t>(sig.l()), &autos.front());
  for (int i = 0; i < sig.l(); ++i) {
    if (sig.factor(i) == GroupSignature::Factor::Z4) {
      for (const auto& w : half.generators())
        if (w.code(i) % 2) throw InvariantViolation("Z4 projection of the index-2 subgroup is not in {0, 2}");
      continue;
    }
    const auto fits = [&](const Q8BitAutomorphism& a) {
      return std::all_of(half.generators().begin(), half.generators().end(),
                         [&](const GroupWord& w) { return q8::b_exp(a.map[w.code(i)]) == 0; });
    };
    const auto it = std::find_if(autos.begin(), autos.end(), fits);
    if (it == autos.end()) throw InvariantViolation("no automorphism moves a quaternion projection into <a>");
    chosen[static_cast<std::size_t>(i)] = &*it;
  }
  const auto theta = [&](const GroupWord& w) {
    auto codes = w.codes();
    for (int i = sig.k2; i < sig.l(); ++i)
      codes[static_cast<std::size_t>(i)] = chosen[static_cast<std::size_t>(i)]->map[codes[static_cast<std::size_t>(i)]];
    return GroupWord::from_codes(sig, codes);
  };

  ConverseResult r;
  r.shape = shape.tag;
  std::vector<GroupWord> base_gens;
  for (const auto& w : half.generators()) base_gens.push_back(xi_unlift(theta(w)));
  r.base = enumerate(GroupSignature(sig.k2, sig.k3, 0), base_gens);
  r.z = theta(z[0]);

  std::vector<std::size_t> image(static_cast<std::size_t>(sig.n()));
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  for (int i = sig.k2; i < sig.l(); ++i) {
    const auto off = static_cast<std::size_t>(sig.bit_offset(i));
    const auto& p = chosen[static_cast<std::size_t>(i)]->p;
    for (std::size_t k = 0; k < 4; ++k) image[off + static_cast<std::size_t>(p[k])] = off + k;
  }
  r.permutation = CoordinatePermutation(image);

  std::vector<GroupWord> moved;
  for (const auto& w : c.generators()) moved.push_back(theta(w));
  const CodeGroup target = enumerate(sig, moved);
  const CodeGroup rebuilt = extend(xi_lift(r.base), r.z);
  bool images_match = true;
  for (const auto& w : c.elements()) images_match = images_match && target.contains(theta(w)) &&
                                                    gray(theta(w)) == r.permutation.apply(gray(w));
  r.round_trip_ok = rebuilt == target && images_match && is_hadamard(r.base);
  return r;
}

}  // namespace z2z4q8
