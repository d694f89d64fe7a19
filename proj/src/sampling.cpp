#include "z2z4q8/sampling.hpp"

#include "z2z4q8/constructions.hpp"
#include "z2z4q8/hadamard.hpp"

namespace z2z4q8 {

std::mt19937_64 job_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Entries 0 or the order-2 element in every coordinate; central in G.
GroupWord random_central_involution(const GroupSignature& sig, std::mt19937_64& rng) {
  std::vector<std::uint8_t> codes(static_cast<std::size_t>(sig.l()));
  for (int i = 0; i < sig.l(); ++i) {
    const int bit = uniform(rng, 0, 1);
    codes[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(sig.factor(i) == GroupSignature::Factor::Z2 ? bit : 2 * bit);
  }
  return GroupWord::from_codes(sig, codes);
}

const GroupWord& random_element(const CodeGroup& c, std::mt19937_64& rng) {
  return c.elements()[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(c.order()) - 1))];
}

}  // namespace

GroupWord random_word(const GroupSignature& sig, std::mt19937_64& rng) {
  std::vector<std::uint8_t> codes(static_cast<std::size_t>(sig.l()));
  for (int i = 0; i < sig.l(); ++i) {
    static constexpr int kTop[3] = {1, 3, 7};
    codes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(uniform(rng, 0, kTop[static_cast<int>(sig.factor(i))]));
  }
  return GroupWord::from_codes(sig, codes);
}

GroupSignature random_signature(int max_n, std::mt19937_64& rng) {
  for (;;) {
    const int k3 = uniform(rng, 0, max_n / 4);
    const int k2 = uniform(rng, 0, (max_n - 4 * k3) / 2);
    const int k1 = uniform(rng, 0, max_n - 4 * k3 - 2 * k2);
    if (k1 + k2 + k3 > 0) return {k1, k2, k3};
  }
}

CodeGroup random_subgroup(int max_n, std::size_t max_order, std::mt19937_64& rng) {
  for (;;) {
    const auto sig = random_signature(max_n, rng);
    std::vector<GroupWord> gens(static_cast<std::size_t>(uniform(rng, 1, 4)));
    for (auto& g : gens) g = random_word(sig, rng);
    try {
      return enumerate(sig, gens, max_order);
    } catch (const OrderOverflow&) {
    }
  }
}

GroupWord random_normalizing(const CodeGroup& c, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const auto w = random_word(c.signature(), rng);
    if (c.contains(mul(w, w)) && normalizes(c, w)) return w;
  }
  return mul(random_element(c, rng), random_central_involution(c.signature(), rng));
}

HadamardSample random_z2z4_hadamard(int m, std::mt19937_64& rng) {
  if (m == 0) return {enumerate(GroupSignature(1, 0, 0), {GroupWord::u_element(GroupSignature(1, 0, 0))}), "Z2"};
  if (m <= 3) {
    const int n = 1 << m;
    for (int attempt = 0; attempt < 1000000; ++attempt) {
      const int k2 = uniform(rng, 0, n / 2);
      const GroupSignature sig(n - 2 * k2, k2, 0);
      std::vector<GroupWord> gens(static_cast<std::size_t>(uniform(rng, 1, m + 1)));
      for (auto& g : gens) g = random_word(sig, rng);
      try {
        auto c = enumerate(sig, gens, 2 * static_cast<std::size_t>(n));
        if (c.order() == 2 * static_cast<std::size_t>(n) && is_hadamard(c))
          return {std::move(c), "Z2Z4 " + sig.to_string()};
      } catch (const OrderOverflow&) {
      }
    }
    throw std::runtime_error("no Z2Z4 Hadamard code found by rejection sampling");
  }
  auto base = random_z2z4_hadamard(m - 1, rng);
  const auto g = random_normalizing(base.code, rng);
  return {generalized_kronecker(base.code, g).output, "K_g(" + base.recipe + ")"};
}

namespace {

GroupWord extension_element(const CodeGroup& lifted, std::mt19937_64& rng) {
  if (uniform(rng, 0, 1)) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      const auto w = random_word(lifted.signature(), rng);
      if (lifted.contains(mul(w, w)) && normalizes(lifted, w) && !extension_condition_witness(lifted, w))
        return w;
    }
  }
  return random_outside_a(lifted.signature(), rng);
}

HadamardSample lifted_sample(int m, std::mt19937_64& rng, bool need_q8 = false) {
  auto base = random_z2z4_hadamard(m - 1, rng);
  // A base without Z4 coordinates lifts to Z4 only.
  for (int attempt = 0; need_q8 && base.code.signature().k2 == 0; ++attempt) {
    if (attempt == 1000) throw std::runtime_error("no Z2Z4 base with Z4 coordinates found");
    base = random_z2z4_hadamard(m - 1, rng);
  }
  const auto lifted = xi_lift(base.code);
  const auto x = extension_element(lifted, rng);
  return {extend(lifted, x), "extend(lift(" + base.recipe + "), " + to_string(x) + ")"};
}

HadamardSample kronecker_sample(HadamardSample inner, std::mt19937_64& rng) {
  const auto g = random_normalizing(inner.code, rng);
  return {generalized_kronecker(inner.code, g).output, "K_g(" + inner.recipe + ")"};
}

}  // namespace

HadamardSample random_hadamard(int m, std::mt19937_64& rng) {
  if (m <= 1) return random_z2z4_hadamard(m, rng);
  switch (uniform(rng, 0, 2)) {
    case 0: return random_z2z4_hadamard(m, rng);
    case 1: return lifted_sample(m, rng);
    default: return kronecker_sample(random_hadamard(m - 1, rng), rng);
  }
}

HadamardSample random_quaternionic_hadamard(int m, std::mt19937_64& rng) {
  if (m <= 1) return random_z2z4_hadamard(m, rng);
  if (m == 2 || uniform(rng, 0, 1)) return lifted_sample(m, rng, true);
  return kronecker_sample(random_quaternionic_hadamard(m - 1, rng), rng);
}

}  // namespace z2z4q8
