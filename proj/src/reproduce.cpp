#include "z2z4q8/reproduce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "z2z4q8/constructions.hpp"
#include "z2z4q8/fixtures.hpp"
#include "z2z4q8/gray.hpp"
#include "z2z4q8/hadamard.hpp"
#include "z2z4q8/io.hpp"
#include "z2z4q8/report.hpp"
#include "z2z4q8/sampling.hpp"
#include "z2z4q8/search.hpp"
#include "z2z4q8/swapper.hpp"

namespace z2z4q8 {

namespace {

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(const CodeType& t) { return to_string(t); }
std::string str(const GroupWord& w) { return "(" + to_string(w) + ")"; }
template <class T>
  requires std::is_arithmetic_v<T>
std::string str(T v) {
  return std::to_string(v);
}
std::string str(const std::pair<int, int>& p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

class Recorder {
 public:
  explicit Recorder(CaseResult& r) : r_(r) {}

  template <class T, class U>
  void eq(std::string name, const T& expected, const U& actual) {
    r_.checks.push_back({std::move(name), str(expected), str(actual), expected == actual});
  }
  void holds(std::string name, bool v) { r_.checks.push_back({std::move(name), "true", str(v), v}); }
  void no_failures(std::string name, std::size_t bad, std::size_t total) {
    r_.checks.push_back({std::move(name), "0 of " + std::to_string(total), std::to_string(bad) + " of " + std::to_string(total),
                         bad == 0});
  }

 private:
  CaseResult& r_;
};

GroupWord word(const GroupSignature& sig, std::string_view tokens) { return parse_element(sig, tokens); }

CodeGroup group(const GroupSignature& sig, std::initializer_list<std::string_view> gens) {
  std::vector<GroupWord> ws;
  for (auto g : gens) ws.push_back(word(sig, g));
  return enumerate(sig, ws);
}

// Hadamard-independent structural numbers, with the two-way rank and
// kernel cross-checks of analyze_structure.
StructureReport structure(const CodeGroup& c, const ReproduceOptions& opt) { return analyze_structure(c, opt.check); }

void hadamard_invariants(Recorder& rec, const std::string& label, const CodeGroup& c, const ReproduceOptions& opt,
                         int n, int rank, int kernel) {
  const auto s = structure(c, opt);
  rec.holds(label + " is Hadamard", is_hadamard(c));
  rec.eq(label + " length", n, c.signature().n());
  rec.eq(label + " (rank, kernel)", std::pair{rank, kernel}, std::pair{s.rank, s.kernel_dim});
}

// Reference table of swappers by class, hard-coded.
// Z4 classes {0,2}, {1,3}; Q8 classes {1,a2}, {a,a3}, {b,a2b}, {ab,a3b}.
constexpr int kZ4Table[2][2] = {{0, 0}, {0, 2}};
constexpr int kQ8Table[4][4] = {{0, 0, 0, 0}, {0, 2, 2, 0}, {0, 0, 2, 2}, {0, 2, 0, 2}};

int q8_class(std::uint8_t x) {
  switch (x) {
    case q8::kOne: case q8::kA2: return 0;
    case q8::kA: case q8::kA3: return 1;
    case q8::kB: case q8::kA2B: return 2;
    default: return 3;
  }
}

bool swapper_identities(const GroupWord& x, const GroupWord& y, const GroupWord& z) {
  const auto& sig = x.signature();
  const auto e = GroupWord::identity(sig);
  bool ok = mul(swapper(x, y), swapper(y, x)) == commutator(x, y) && swapper(x, inv(x)) == swapper(x, x) &&
            swapper(x, x) == mul(x, x) && swapper(x, mul(y, z)) == mul(swapper(x, y), swapper(x, z)) &&
            swapper(mul(x, y), z) == mul(swapper(x, z), swapper(y, z));
  if (mul(z, z) == e)
    ok = ok && swapper(mul(z, x), y) == swapper(x, y) && swapper(x, mul(z, y)) == swapper(x, y) &&
         swapper(z, x) == e && swapper(x, z) == e;
  // Defining property: Phi([x,y] x y) = Phi(x) + Phi(y).
  return ok && gray(mul(swapper(x, y), mul(x, y))) == gray(x) + gray(y);
}

void swapper_table(Recorder& rec, const ReproduceOptions& opt) {
  const GroupSignature z4(0, 1, 0), q(0, 0, 1);
  std::size_t bad_z4 = 0, bad_q8 = 0;
  for (std::uint8_t a = 0; a < 4; ++a)
    for (std::uint8_t b = 0; b < 4; ++b) {
      const std::uint8_t ca[1] = {a}, cb[1] = {b};
      if (swapper(GroupWord::from_codes(z4, ca), GroupWord::from_codes(z4, cb)).code(0) != kZ4Table[a % 2][b % 2]) ++bad_z4;
    }
  for (std::uint8_t a = 0; a < 8; ++a)
    for (std::uint8_t b = 0; b < 8; ++b) {
      const std::uint8_t ca[1] = {a}, cb[1] = {b};
      if (swapper(GroupWord::from_codes(q, ca), GroupWord::from_codes(q, cb)).code(0) != kQ8Table[q8_class(a)][q8_class(b)])
        ++bad_q8;
    }
  rec.no_failures("Z4 pairs differing from the table", bad_z4, 16);
  rec.no_failures("Q8 pairs differing from the table", bad_q8, 64);

  for (const auto& sig : {z4, q}) {
    const auto all = enumerate(sig, {GroupWord::u_element(sig), word(sig, sig.k3 ? "a" : "1"),
                                     word(sig, sig.k3 ? "b" : "1")});
    std::size_t bad = 0, total = 0;
    for (const auto& x : all.elements())
      for (const auto& y : all.elements())
        for (const auto& z : all.elements()) {
          ++total;
          if (!swapper_identities(x, y, z)) ++bad;
        }
    rec.no_failures("swapper identities on all triples of " + sig.to_string(), bad, total);
  }

  const GroupSignature mixed(2, 2, 2);
  auto rng = job_rng(opt.seed, 0x5a);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < opt.random_swapper_words; ++i) {
    const auto x = random_word(mixed, rng), y = random_word(mixed, rng), z = random_word(mixed, rng);
    // Also exercise the involution branch with z^2 = e.
    if (!swapper_identities(x, y, z) || !swapper_identities(x, y, mul(z, z))) ++bad;
  }
  rec.no_failures("swapper identities on random words of " + mixed.to_string(), bad, opt.random_swapper_words);
}

void quaternion_pair(Recorder& rec, const ReproduceOptions& opt) {
  const auto c = fixture_group("quaternion_pair_nonlinear");
  const auto s = structure(c, opt);
  rec.eq("order", std::size_t{8}, c.order());
  rec.eq("type", CodeType{1, 0, 2}, s.type);
  rec.eq("linear", false, s.is_linear);
  rec.eq("abelian", false, s.is_abelian);
  rec.eq("kernel dimension", 1, s.kernel_dim);
  rec.eq("rank", 4, s.rank);
  const auto sig = c.signature();
  const auto listed = subgroup_from_elements(
      sig, {word(sig, "1 1"), word(sig, "a a"), word(sig, "a2 a2"), word(sig, "a3 a3"), word(sig, "ab b"),
            word(sig, "a2b ab"), word(sig, "a3b a2b"), word(sig, "b a3b")});
  rec.holds("elements match the listed eight", listed == c);
  // The reference value (a2, 1) is the swapper with the arguments swapped.
  const auto x = word(sig, "a a"), y = word(sig, "ab b");
  rec.eq("[x, y] from the definition", word(sig, "1 a2"), swapper(x, y));
  rec.eq("[y, x]", word(sig, "a2 1"), swapper(y, x));
  rec.holds("[x, y] and [y, x] outside the code", !c.contains(swapper(x, y)) && !c.contains(swapper(y, x)));
  // Every bound of the chain is attained.
  const auto [sg, dl, rh] = std::tuple{s.type.sigma, s.type.delta, s.type.rho};
  rec.eq("r = k + 3", s.kernel_dim + 3, s.rank);
  rec.eq("k = sigma", sg, s.kernel_dim);
  rec.eq("r = sigma + delta + rho + C(delta + rho, 2)", static_cast<long long>(sg + dl + rh) + binom2(dl + rh),
         static_cast<long long>(s.rank));
  rec.eq("sigma = delta + min(1, rho)", dl + std::min(1, rh), sg);
  rec.holds("all general bounds hold", check_bounds(c, s, opt.check).all_ok());
}

void q8x4_rank7(Recorder& rec, const ReproduceOptions& opt) {
  const auto c = fixture_group("q8x4_hadamard_rank7");
  const auto s = structure(c, opt);
  hadamard_invariants(rec, "code", c, opt, 16, 7, 2);
  rec.eq("type", CodeType{2, 0, 3}, s.type);
  rec.holds("K(C) = T(C)", group_kernel(c) == torsion(c));
  rec.eq("shape", 2, classify_shape(c).tag);
  const auto sig = c.signature();
  const auto a = word(sig, "a a a a"), b = word(sig, "b ab b ab"), cc = word(sig, "a2 1 a a3");
  rec.eq("[a,b]", word(sig, "a2 1 a2 1"), swapper(a, b));
  // Trivial modulo C: [a,c] = c^2.
  rec.eq("[a,c]", mul(cc, cc), swapper(a, cc));
  rec.holds("[a,c] in the code", c.contains(swapper(a, cc)));
  rec.eq("[b,c]", word(sig, "1 1 1 a2"), swapper(b, cc));
  const auto weights = weight_distribution(c);
  rec.holds("weights in {0, 8, 16}",
            std::all_of(weights.begin(), weights.end(), [](const auto& kv) { return kv.first % 8 == 0; }));
}

void perfect_codes(Recorder& rec, const ReproduceOptions& opt) {
  for (const char* name : {"z2x4_q8_extended_perfect", "z4x2_q8_extended_perfect", "q8x2_extended_perfect"}) {
    const auto c = fixture_group(name);
    rec.eq(std::string(name) + " length", 8, c.signature().n());
    rec.holds(std::string(name) + " extended perfect", is_extended_perfect(c, true, opt.check.exec));
  }
  const auto p = fixture_group("z2x3_q8_perfect");
  rec.eq("z2x3_q8_perfect length", 7, p.signature().n());
  rec.holds("z2x3_q8_perfect perfect", is_perfect(p, opt.check.exec));
  const auto img = gray_images(p);
  rec.eq("z2x3_q8_perfect covering radius", std::size_t{1}, covering_radius(img, 7, opt.check.exec));

  const auto r = fixture_group("q8_repetition");
  auto words = gray_images(r);
  std::sort(words.begin(), words.end());
  std::vector<BinaryVector> expect = {BinaryVector::from_string("0000"), BinaryVector::from_string("1111")};
  std::sort(expect.begin(), expect.end());
  rec.holds("<a2> gives {0000, 1111}", words == expect);
  rec.holds("<a2> extended perfect", is_extended_perfect(r, true, opt.check.exec));
}

CodeGroup kronecker_of_rank7_code() {
  const auto c = fixture_group("q8x4_hadamard_rank7");
  return generalized_kronecker(c, word(c.signature(), "b ab 1 1")).output;
}

void q8x8_shape5(Recorder& rec, const ReproduceOptions& opt) {
  const auto c = fixture_group("q8x8_hadamard_shape5");
  const auto rep = analyze(c, opt.check);
  hadamard_invariants(rec, "code", c, opt, 32, 8, 2);
  rec.eq("type", CodeType{2, 0, 4}, rep.structure.type);
  rec.eq("shape", 5, rep.shape ? rep.shape->tag : 0);
  const auto* exc = rep.bounds.find("ceil_half_m_le_kernel_dim");
  rec.holds("k < ceil(m/2) recognized as the allowed exception", exc && exc->ok && exc->excepted);
  const auto* exc2 = rep.bounds.find("delta_plus_rho_le_half_m_plus_2");
  rec.holds("m + 1 - sigma > floor((m+2)/2) recognized as the allowed exception", exc2 && exc2->ok && exc2->excepted);
  rec.holds("no bound flagged", rep.bounds.all_ok());

  const auto k = kronecker_of_rank7_code();
  hadamard_invariants(rec, "K_g of the length 16 rank 7 code", k, opt, 32, 8, 2);
  rec.holds("K_g of the length 16 rank 7 code has quaternion coordinates", k.signature().k3 > 0);
  rec.holds("K_g of the length 16 rank 7 code is not abelian", !is_abelian(k));
}

CodeGroup extension_of_len8(std::string_view x) {
  const auto lifted = xi_lift(fixture_group("z4x4_hadamard_len8"));
  return extend(lifted, word(lifted.signature(), x));
}

void lift_extend_len16(Recorder& rec, const ReproduceOptions& opt) {
  const auto base = fixture_group("z4x4_hadamard_len8");
  const auto lifted = xi_lift(base);
  rec.holds("lift equals <(a,a,a,a),(a2,1,a,a3)>", lifted == group(lifted.signature(), {"a a a a", "a2 1 a a3"}));

  // The element given for the linear case lies in the lifted code itself,
  // so it cannot double it. This check stays red.
  const auto x_lin = word(lifted.signature(), "1 1 a2 a2");
  rec.holds("x = (1,1,a2,a2) lies outside the lifted code", !lifted.contains(x_lin));
  if (!lifted.contains(x_lin)) hadamard_invariants(rec, "x = (1,1,a2,a2)", extension_of_len8("1 1 a2 a2"), opt, 16, 5, 5);
  const auto q = extension_of_len8("b ab b ab");
  rec.holds("x = (b,ab,b,ab) gives the length 16 rank 7 code", q == fixture_group("q8x4_hadamard_rank7"));
  hadamard_invariants(rec, "x = (b,ab,b,ab)", q, opt, 16, 7, 2);
  hadamard_invariants(rec, "y = (b,b,b,a3b)", extension_of_len8("b b b a3b"), opt, 16, 6, 3);
  hadamard_invariants(rec, "x = (b,b,b,b)", extension_of_len8("b b b b"), opt, 16, 5, 5);
}

CodeGroup extension_of_len16() {
  const auto lifted = xi_lift(fixture_group("z2x4_z4x6_hadamard_len16"));
  return extend(lifted, word(lifted.signature(), "1 1 1 1 b ab b ab ab a3b"));
}

void lift_extend_len32(Recorder& rec, const ReproduceOptions& opt) {
  const auto lifted = xi_lift(fixture_group("z2x4_z4x6_hadamard_len16"));
  rec.holds("lift equals the displayed <x1, z2, z3>",
            lifted == group(lifted.signature(), {"2 2 2 2 a2 a2 a2 a2 a2 a2", "0 2 0 2 1 a2 a a a a",
                                                 "0 0 2 2 a a 1 a a2 a3"}));
  const auto c = extension_of_len16();
  const auto s = structure(c, opt);
  hadamard_invariants(rec, "extension", c, opt, 32, 9, 3);
  rec.eq("type", CodeType{3, 0, 3}, s.type);
  rec.eq("shape", 3, classify_shape(c).tag);
  rec.eq("rank meets the length-32 maximum", max_rank_for_length(5), static_cast<long long>(s.rank));
  rec.eq("m + 1 + C((m+1)/2, 2) at m = 5", 9LL, 5 + 1 + binom2(3));
}

CodeGroup kronecker_of_kernel4_code() {
  const auto c = fixture_group("q8x8_hadamard_kernel4");
  return generalized_kronecker(c, word(c.signature(), "a2 a2 1 1 b ab b ab")).output;
}

void kronecker_kernel_drop(Recorder& rec, const ReproduceOptions& opt) {
  const auto c = fixture_group("q8x8_hadamard_kernel4");
  const auto s = structure(c, opt);
  hadamard_invariants(rec, "input", c, opt, 32, 7, 4);
  rec.eq("input type", CodeType{3, 0, 3}, s.type);
  rec.eq("input shape", 3, classify_shape(c).tag);
  const auto k = kronecker_of_kernel4_code();
  const auto sk = structure(k, opt);
  hadamard_invariants(rec, "K_g", k, opt, 64, 8, 3);
  rec.eq("K_g type", CodeType{3, 0, 4}, sk.type);
  rec.eq("K_g shape", 2, classify_shape(k).tag);
  rec.holds("kernel dimension drops", sk.kernel_dim < s.kernel_dim);
}

void z2z4_len32(Recorder& rec, const ReproduceOptions& opt) {
  const auto c = fixture_group("z2x8_z4x12_hadamard_kernel4");
  const auto q = fixture_group("q8x8_hadamard_kernel4");
  hadamard_invariants(rec, "Z2Z4 code", c, opt, 32, 7, 4);
  rec.holds("abelian", is_abelian(c));
  rec.eq("shape", 1, classify_shape(c).tag);
  const auto sc = structure(c, opt), sq = structure(q, opt);
  rec.eq("same (rank, kernel) as the Q8^8 code", std::pair{sq.rank, sq.kernel_dim}, std::pair{sc.rank, sc.kernel_dim});
}

void shape4_kronecker(Recorder& rec, const ReproduceOptions& opt) {
  const auto c = fixture_group("z2x4_q8_linear_shape4");
  rec.eq("shape", 4, classify_shape(c).tag);
  rec.holds("Hadamard", is_hadamard(c));
  rec.holds("linear", is_linear(c));
  rec.eq("length", 8, c.signature().n());

  const auto d = kronecker(c).output;
  const auto sig = d.signature();
  rec.holds("Kronecker output equals the displayed <x1, x2, z1, z2>",
            d == group(sig, {"1 1 1 1 1 1 1 1 a2 a2", "0 0 0 0 1 1 1 1 1 a2", "1 1 0 0 1 1 0 0 a a",
                             "1 0 1 0 1 0 1 0 b b"}));
  const auto sd = structure(d, opt);
  rec.eq("Kronecker length", 16, sig.n());
  rec.holds("Kronecker linear", sd.is_linear);
  rec.eq("Kronecker dimension", 5, d.log2_order());
  rec.eq("Kronecker (rank, kernel)", std::pair{5, 5}, std::pair{sd.rank, sd.kernel_dim});
  rec.eq("Kronecker shape", 4, classify_shape(d).tag);

  const auto bar = fixture_group("z2x8_q8x2_shape4_rank6");
  const auto sb = structure(bar, opt);
  rec.eq("modified code shape", 4, classify_shape(bar).tag);
  rec.holds("modified code Hadamard", is_hadamard(bar));
  rec.eq("modified code rank", 6, sb.rank);
  rec.eq("rank meets sigma + delta + rho + 1", sb.type.sigma + sb.type.delta + sb.type.rho + 1, sb.rank);
  // As with the order-8 code, the reference tuple is [z2 bar, z1].
  const auto z1 = word(sig, "1 1 0 0 1 1 0 0 a a"), z2 = word(sig, "1 0 1 0 1 0 1 0 ab b");
  const auto sw = swapper(z1, z2), ws = swapper(z2, z1);
  rec.eq("[z1, z2 bar] from the definition", word(sig, "0 0 0 0 0 0 0 0 1 a2"), sw);
  rec.eq("[z2 bar, z1]", word(sig, "0 0 0 0 0 0 0 0 a2 1"), ws);
  const auto span_bar = span_group(bar), span_d = span_group(d);
  rec.holds("both in the span group", span_bar.contains(sw) && span_bar.contains(ws));
  rec.holds("neither in the code", !bar.contains(sw) && !bar.contains(ws));
  rec.holds("neither in the span group of D", !span_d.contains(sw) && !span_d.contains(ws));
}

// Independent streams per suite.
std::mt19937_64 suite_rng(const ReproduceOptions& opt, std::uint64_t suite, std::size_t i) {
  return job_rng(opt.seed, (suite << 32) | i);
}

struct KroneckerJob {
  CodeGroup input;
  GroupWord g;
};

std::vector<KroneckerJob> kronecker_inputs(const ReproduceOptions& opt) {
  std::vector<KroneckerJob> jobs;
  for (std::size_t i = 0; i < opt.kronecker_samples; ++i) {
    auto rng = suite_rng(opt, 11, i);
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    auto c = random_hadamard(m, rng).code;
    auto g = random_normalizing(c, rng);
    jobs.push_back({std::move(c), std::move(g)});
  }
  return jobs;
}

void kronecker_laws(Recorder& rec, const ReproduceOptions& opt) {
  const auto jobs = kronecker_inputs(opt);
  const std::size_t n = jobs.size();
  std::size_t not_hadamard = 0, rank_bad = 0, kernel_plain_bad = 0, kernel_upper_bad = 0, rank_plain_bad = 0,
              type_bad = 0, plain_type_bad = 0;
  std::string first_rank_failure;
  for (const auto& [c, g] : jobs) {
    const auto s = structure(c, opt);
    KroneckerResult kg;
    try {
      kg = generalized_kronecker(c, g);
    } catch (const InvariantViolation&) {
      ++type_bad;
      continue;
    }
    const auto sg = structure(kg.output, opt);
    if (!is_hadamard(kg.output)) ++not_hadamard;
    if (sg.rank != s.rank + 1) {
      if (first_rank_failure.empty())
        first_rank_failure = c.signature().to_string() + " r " + std::to_string(s.rank) + " -> " + std::to_string(sg.rank);
      ++rank_bad;
    }
    if (sg.kernel_dim > s.kernel_dim + 1) ++kernel_upper_bad;
    const auto plain = kronecker(c);
    const auto sp = structure(plain.output, opt);
    if (sp.kernel_dim != s.kernel_dim + 1) ++kernel_plain_bad;
    if (sp.rank != s.rank + 1) ++rank_plain_bad;
    if (!(sp.type == CodeType{s.type.sigma + 1, s.type.delta, s.type.rho})) ++plain_type_bad;
  }
  rec.no_failures("K_g outputs not Hadamard", not_hadamard, n);
  rec.no_failures("K_g with computed type differing from the prediction", type_bad, n);
  rec.no_failures("K_g with r(K_g) != r + 1" + (first_rank_failure.empty() ? "" : " (first: " + first_rank_failure + ")"),
                  rank_bad, n);
  rec.no_failures("K_g with k(K_g) > k + 1", kernel_upper_bad, n);
  rec.no_failures("K with k(K) != k + 1", kernel_plain_bad, n);
  rec.no_failures("K with r(K) != r + 1", rank_plain_bad, n);
  rec.no_failures("K with type != (sigma + 1, delta, rho)", plain_type_bad, n);
}

std::vector<CodeGroup> property_subgroups(const ReproduceOptions& opt) {
  std::vector<CodeGroup> out;
  for (std::size_t i = 0; i < opt.property_samples; ++i) {
    auto rng = suite_rng(opt, 12, i);
    out.push_back(random_subgroup(32, std::size_t{1} << 10, rng));
  }
  return out;
}

std::vector<CodeGroup> hadamard_suite(const ReproduceOptions& opt) {
  std::vector<CodeGroup> out;
  for (const auto& f : fixtures()) {
    auto c = fixture_group(f.name);
    if (is_hadamard(c)) out.push_back(std::move(c));
  }
  for (auto c : {extension_of_len8("b b b a3b"), extension_of_len16(), kronecker_of_kernel4_code(),
                 kronecker_of_rank7_code()})
    out.push_back(std::move(c));
  for (std::size_t i = 0; i < opt.hadamard_samples; ++i) {
    auto rng = suite_rng(opt, 13, i);
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    out.push_back(i % 2 ? random_quaternionic_hadamard(m, rng).code : random_hadamard(m, rng).code);
  }
  return out;
}

void add_failures(std::map<std::string, std::size_t>& fails, const BoundReport& b) {
  for (const auto& c : b.checks)
    if (!c.ok) ++fails[c.name];
}

void property_suites(Recorder& rec, const ReproduceOptions& opt) {
  const auto subgroups = property_subgroups(opt);
  std::map<std::string, std::size_t> fails;
  std::size_t errors = 0, small_abelian_nonlinear = 0;
  std::string first_error;
  for (const auto& c : subgroups) {
    try {
      const auto s = structure(c, opt);
      add_failures(fails, check_bounds(c, s, opt.check));
      if (s.is_abelian && c.signature().k3 == 0 && c.order() <= 8 && !s.is_linear) ++small_abelian_nonlinear;
    } catch (const std::exception& e) {
      if (first_error.empty()) first_error = e.what();
      ++errors;
    }
  }
  rec.no_failures("random subgroups with a cross-check error" + (first_error.empty() ? "" : " (" + first_error + ")"),
                  errors, subgroups.size());
  rec.no_failures("abelian Z2Z4 codes of order <= 8 that are not linear", small_abelian_nonlinear, subgroups.size());
  for (const auto& [name, count] : fails) rec.no_failures("random subgroups failing " + name, count, subgroups.size());

  const auto hs = hadamard_suite(opt);
  std::map<std::string, std::size_t> hfails;
  std::size_t herrors = 0, converse_total = 0, converse_bad = 0, relations_bad = 0;
  std::map<int, std::size_t> shapes;
  first_error.clear();
  for (const auto& c : hs) {
    try {
      const auto rep = analyze(c, opt.check);
      add_failures(hfails, rep.bounds);
      ++shapes[rep.shape->tag];
      if (!shape_relations_hold(rep.shape->tag, rep.shape->witness.gens) ||
          !has_unique_products(c, rep.shape->witness.gens))
        ++relations_bad;
      if (rep.shape->tag == 2 || rep.shape->tag == 3) {
        ++converse_total;
        if (!structural_converse_check(c).round_trip_ok) ++converse_bad;
      }
    } catch (const std::exception& e) {
      if (first_error.empty()) first_error = e.what();
      ++herrors;
    }
  }
  rec.no_failures("Hadamard codes with an analysis error" + (first_error.empty() ? "" : " (" + first_error + ")"), herrors,
                  hs.size());
  rec.no_failures("Hadamard codes whose shape witness fails its relations", relations_bad, hs.size());
  for (const auto& [name, count] : hfails) rec.no_failures("Hadamard codes failing " + name, count, hs.size());
  rec.no_failures("shape 2/3 codes failing the lift-extend round trip", converse_bad, converse_total);
  std::string dist;
  for (const auto& [tag, count] : shapes) dist += " " + std::to_string(tag) + ":" + std::to_string(count);
  rec.holds("shapes seen" + dist, !shapes.empty());
}

std::vector<CodeGroup> all_suite_codes(const ReproduceOptions& opt) {
  std::vector<CodeGroup> out;
  for (const auto& f : fixtures()) out.push_back(fixture_group(f.name));
  for (auto x : {"b ab b ab", "b b b a3b", "b b b b"}) out.push_back(extension_of_len8(x));
  out.push_back(extension_of_len16());
  out.push_back(kronecker_of_kernel4_code());
  out.push_back(kronecker_of_rank7_code());
  out.push_back(kronecker(fixture_group("z2x4_q8_linear_shape4")).output);
  for (auto& c : property_subgroups(opt)) out.push_back(std::move(c));
  for (auto& c : hadamard_suite(opt)) out.push_back(std::move(c));
  for (auto& j : kronecker_inputs(opt)) {
    out.push_back(generalized_kronecker(j.input, j.g).output);
    out.push_back(kronecker(j.input).output);
    out.push_back(std::move(j.input));
  }
  return out;
}

void cross_oracle(Recorder& rec, const ReproduceOptions& opt) {
  const auto codes = all_suite_codes(opt);
  std::size_t rank_bad = 0, kernel_bad = 0, exec_bad = 0, kernel_ref_bad = 0, kernel_ref_total = 0;
  for (const auto& c : codes) {
    if (rank_via_span(c, opt.check.max_order) != rank_via_elimination(c)) ++rank_bad;
    const auto kg = group_kernel(c);
    std::vector<BinaryVector> from_group;
    for (const auto& w : kg.elements()) from_group.push_back(gray(w));
    std::sort(from_group.begin(), from_group.end());
    const auto serial = binary_kernel(c, Exec::Serial);
    if (serial != from_group) ++kernel_bad;
    if (binary_kernel(c, Exec::Parallel) != serial) ++exec_bad;
    if (c.order() <= (std::size_t{1} << 10)) {
      ++kernel_ref_total;
      if (!(group_kernel_all_pairs(c) == kg)) ++kernel_ref_bad;
    }
  }
  rec.no_failures("codes where span-group rank != GF(2) rank", rank_bad, codes.size());
  rec.no_failures("codes where the translation kernel != Phi(group kernel)", kernel_bad, codes.size());
  rec.no_failures("codes where serial and parallel kernels differ", exec_bad, codes.size());
  rec.no_failures("codes where the generator-tested group kernel != the all-pairs one", kernel_ref_bad, kernel_ref_total);
}

void len16_rank_bound(Recorder& rec, const ReproduceOptions& opt) {
  long long best = 0;
  std::string per_shape;
  for (int tag = 1; tag <= 5; ++tag) {
    if (!shape_feasible(tag, 4)) continue;
    const long long v = 5 + shape_rank_excess_bound(tag, 4);
    per_shape += " " + std::to_string(tag) + ":" + std::to_string(v);
    best = std::max(best, v);
  }
  rec.eq("max over feasible shapes of m + 1 + excess at m = 4 (" + per_shape.substr(1) + ")", 7LL, best);
  rec.eq("length-16 rank maximum", 7LL, max_rank_for_length(4));

  SearchOptions so;
  so.length = 16;
  so.seed = opt.seed;
  so.budget = opt.search_budget;
  so.exec = opt.check.exec;
  const auto res = search(so);
  const std::set<std::pair<int, int>> allowed = {{5, 5}, {6, 3}, {7, 2}};
  std::size_t outside = 0, total = 0;
  std::string seen;
  for (const auto& [rk, count] : res.rank_kernel_counts) {
    total += count;
    seen += " " + str(rk) + ":" + std::to_string(count);
    if (!allowed.contains(rk)) outside += count;
  }
  rec.no_failures("length-16 samples with (r,k) outside {(5,5),(6,3),(7,2)};" + seen, outside, total);
  rec.eq("length-16 samples", opt.search_budget, total);

  so.shape = 2;
  const auto s2 = search(so);
  const bool hit = std::any_of(s2.hits.begin(), s2.hits.end(),
                               [&](const SearchHit& h) { return allowed.contains({h.rank, h.kernel_dim}); });
  rec.holds("shape-2 search finds a length-16 code with allowed (r,k)", hit);
}

using CaseFn = void (*)(Recorder&, const ReproduceOptions&);

struct CaseEntry {
  CaseInfo info;
  CaseFn run;
};

const std::vector<CaseEntry>& entries() {
  static const std::vector<CaseEntry> all = {
      {{"swapper-table", "swapper table and swapper identities"}, swapper_table},
      {{"quaternion-pair", "non-Z2Z4 quaternion code of order 8, tight bounds"}, quaternion_pair},
      {{"q8x4-rank7", "Q8^4 Hadamard code of length 16 with rank 7"}, q8x4_rank7},
      {{"perfect-codes", "perfect and extended perfect codes of length 4, 7, 8"}, perfect_codes},
      {{"q8x8-shape5", "shape 5 Hadamard code of length 32 below ceil(m/2)"}, q8x8_shape5},
      {{"lift-extend-len16", "lift of a Z4 code extended to the three length-16 codes"}, lift_extend_len16},
      {{"lift-extend-len32", "lift and extension reaching rank 9 at length 32"}, lift_extend_len32},
      {{"kronecker-kernel-drop", "generalized Kronecker lowering the kernel dimension"}, kronecker_kernel_drop},
      {{"z2z4-len32", "Z2Z4 code with the invariants of a quaternion code"}, z2z4_len32},
      {{"shape4-kronecker", "shape 4 code, its Kronecker double and a rank 6 variant"}, shape4_kronecker},
      {{"kronecker-laws", "rank, kernel and type laws of the Kronecker constructions"}, kronecker_laws},
      {{"property-suites", "bounds on random subgroups and Hadamard codes"}, property_suites},
      {{"cross-oracle", "rank and kernel computed two ways on every suite code"}, cross_oracle},
      {{"len16-rank-bound", "length-16 rank bound and seeded search"}, len16_rank_bound},
  };
  return all;
}

}  // namespace

const std::vector<CaseInfo>& reproduce_cases() {
  static const std::vector<CaseInfo> infos = [] {
    std::vector<CaseInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

CaseResult run_case(std::string_view id, const ReproduceOptions& opt) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    CaseResult r;
    r.id = e.info.id;
    r.title = e.info.title;
    Recorder rec(r);
    try {
      e.run(rec, opt);
    } catch (const std::exception& ex) {
      r.error = ex.what();
    }
    return r;
  }
  throw std::out_of_range("unknown case '" + std::string(id) + "'");
}

}  // namespace z2z4q8
