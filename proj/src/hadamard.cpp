#include "z2z4q8/hadamard.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "z2z4q8/gray.hpp"
#include "z2z4q8/swapper.hpp"

namespace z2z4q8 {

namespace {

GroupWord sq(const GroupWord& x) { return mul(x, x); }

std::string zname(std::size_t i) { return "z" + std::to_string(i + 1); }

bool generated_squares_avoid(const GroupSignature& sig, const std::vector<GroupWord>& words, const GroupWord& target,
                             int* log2_order = nullptr) {
  std::vector<GroupWord> squares;
  for (const auto& w : words) squares.push_back(sq(w));
  const auto g = enumerate(sig, squares);
  if (log2_order) *log2_order = g.log2_order();
  return !g.contains(target);
}

}  // namespace

bool is_hadamard(const CodeGroup& c) {
  const auto n = static_cast<std::size_t>(c.signature().n());
  if (c.order() != 2 * n || n < 2) return false;
  const auto u = GroupWord::u_element(c.signature());
  if (!c.contains(u)) return false;
  for (const auto& w : c.elements()) {
    if (w.is_identity() || w == u) continue;
    if (2 * gray(w).weight() != n) return false;
  }
  return true;
}

bool is_normalized(const StandardGenSet& g) {
  if (g.zs.empty()) return true;
  const auto u = GroupWord::u_element(g.zs.front().signature());
  std::vector<const GroupWord*> with_u;
  for (const auto& z : g.zs)
    if (sq(z) == u) with_u.push_back(&z);
  if (with_u.size() > 2) return false;
  return with_u.size() < 2 || commutator(*with_u[0], *with_u[1]) == u;
}

int order_equal_square_pairs(std::vector<GroupWord>& zs) {
  if (zs.empty()) return 0;
  const auto u = GroupWord::u_element(zs.front().signature());
  std::vector<std::pair<GroupWord, std::vector<std::size_t>>> classes;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const auto s = sq(zs[i]);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& cl) { return cl.first == s; });
    if (it == classes.end())
      classes.push_back({s, {i}});
    else
      it->second.push_back(i);
  }
  std::vector<GroupWord> pairs_u, pairs, singles;
  for (const auto& [s, idx] : classes) {
    if (idx.size() > 2)
      throw InvariantViolation(std::to_string(idx.size()) + " generators share a square; a Hadamard code allows 2");
    if (idx.size() == 1) continue;
    auto& dst = s == u ? pairs_u : pairs;
    if (s == u && !(commutator(zs[idx[0]], zs[idx[1]]) == u))
      throw InvariantViolation("generators squaring to u do not have commutator u");
    dst.push_back(zs[idx[0]]);
    dst.push_back(zs[idx[1]]);
  }
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const auto s = sq(zs[i]);
    const auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& cl) { return cl.first == s; });
    if (it->second.size() == 1) singles.push_back(zs[i]);
  }
  const int eps = static_cast<int>((pairs_u.size() + pairs.size()) / 2);
  zs = std::move(pairs_u);
  zs.insert(zs.end(), pairs.begin(), pairs.end());
  zs.insert(zs.end(), singles.begin(), singles.end());
  return eps;
}

NormalizedGenSet normalize_generators(const CodeGroup& c) {
  if (!is_hadamard(c)) throw NotHadamard();
  NormalizedGenSet out;
  out.gens = standard_generators(c);
  auto& z = out.gens.zs;
  const auto u = GroupWord::u_element(c.signature());

  std::stable_partition(z.begin(), z.end(), [&](const GroupWord& w) { return sq(w) == u; });
  const auto k = static_cast<std::size_t>(std::count_if(z.begin(), z.end(), [&](const GroupWord& w) { return sq(w) == u; }));
  if (k >= 2) {
    for (std::size_t i = 1; i < k; ++i)
      if (commutator(z[0], z[i]) == u) {
        std::swap(z[1], z[i]);
        break;
      }
    const GroupWord z1 = z[0], z2 = z[1];
    const bool pair12 = commutator(z1, z2) == u;
    for (std::size_t i = 1; i < k; ++i) {
      if (i == 1 && pair12) continue;
      if (!(commutator(z1, z[i]) == u))
        z[i] = mul(z1, z[i]);
      else if (!(commutator(z2, z[i]) == u))
        z[i] = mul(z2, z[i]);
      else
        z[i] = mul(mul(z1, z2), z[i]);
    }
  }
  if (!is_normalized(out.gens)) throw InvariantViolation("normalizing substitutions left more than two u-squares");
  out.epsilon = order_equal_square_pairs(z);
  return out;
}

std::string shape_structure(int tag, const CodeType& t) {
  // Factors with exponent 0 are dropped; a trivial normal part drops the ⋊.
  const auto p = [](const char* base, int e) {
    return e == 0 ? std::string() : std::string(base) + (e == 1 ? "" : "^" + std::to_string(e));
  };
  const auto semi = [](const std::string& normal, const char* acting) {
    return normal.empty() ? std::string(acting) : "(" + normal + " ⋊ " + acting + ")";
  };
  std::vector<std::string> parts;
  switch (tag) {
    case 1: parts = {p("Z2", t.sigma - t.delta), p("Z4", t.delta)}; break;
    case 2: parts = {p("Z2", t.sigma - t.rho + 1), semi(p("Z4", t.rho - 2), "Q8")}; break;
    case 3: parts = {p("Z2", t.sigma - t.rho), semi(p("Z4", t.rho - 1), "Z4")}; break;
    case 4: parts = {p("Z2", t.sigma - t.delta - 1), p("Z4", t.delta), "Q8"}; break;
    case 5: parts = {p("Z2", t.sigma - 2), "(Q8 ⋊ Q8)"}; break;
    default: return "";
  }
  std::string out;
  for (const auto& f : parts) {
    if (f.empty()) continue;
    out += (out.empty() ? "" : " × ") + f;
  }
  return out.empty() ? "1" : out;
}

bool shape_relations_hold(int tag, const StandardGenSet& g) {
  const auto& z = g.zs;
  const std::size_t rho = z.size(), delta = g.ys.size();
  if (tag == 1) return rho == 0;
  if (rho < 2) return false;
  const auto sig = z[0].signature();
  const auto u = GroupWord::u_element(sig);
  const auto e = GroupWord::identity(sig);
  const auto cm = [&](std::size_t i, std::size_t j) { return commutator(z[i], z[j]); };

  switch (tag) {
    case 2: {
      if (delta != 0 || !(sq(z[0]) == u) || !(sq(z[1]) == u) || !(cm(0, 1) == u)) return false;
      for (std::size_t j = 2; j < rho; ++j) {
        if (!(cm(0, j) == sq(z[j])) || !(cm(1, j) == sq(z[j]))) return false;
        for (std::size_t k = 2; k < rho; ++k)
          if (!(cm(j, k) == e)) return false;
      }
      return true;
    }
    case 3: {
      if (delta != 0 || !(sq(z[0]) == u)) return false;
      const std::vector<GroupWord> rest(z.begin() + 1, z.end());
      int log2 = 0;
      if (!generated_squares_avoid(sig, rest, u, &log2) || log2 != static_cast<int>(rho) - 1) return false;
      for (std::size_t i = 1; i < rho; ++i) {
        if (!(cm(0, i) == sq(z[i]))) return false;
        for (std::size_t j = 1; j < rho; ++j)
          if (i != j && !(cm(i, j) == e)) return false;
      }
      return true;
    }
    case 4:
      return rho == 2 && delta <= 1 && sq(z[0]) == sq(z[1]) && sq(z[0]) == cm(0, 1) && !(sq(z[0]) == u);
    case 5: {
      if (delta != 0 || rho != 4) return false;
      if (!(sq(z[0]) == u) || !(sq(z[1]) == u) || !(cm(0, 1) == u)) return false;
      if (sq(z[2]) == u || !(sq(z[2]) == sq(z[3])) || !(sq(z[2]) == cm(2, 3))) return false;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 2; j < 4; ++j) {
          const auto c = cm(i, j);
          if (!(c == e) && !(c == sq(z[j]))) return false;
        }
      return true;
    }
    default: return false;
  }
}

Shape classify_shape(const CodeGroup& c) {
  Shape shape;
  shape.witness = normalize_generators(c);
  auto& g = shape.witness.gens;
  auto& z = g.zs;
  const auto sig = c.signature();
  const auto u = GroupWord::u_element(sig);
  const auto e = GroupWord::identity(sig);
  auto& trail = shape.trail;
  const auto replace = [&](std::size_t i, GroupWord w, const std::string& how) {
    z[i] = std::move(w);
    trail.push_back(zname(i) + " <- " + how);
  };
  const auto move_to = [&](std::size_t from, std::size_t to) {
    if (from == to) return;
    std::swap(z[from], z[to]);
    trail.push_back("swap " + zname(from) + " " + zname(to));
  };

  int tag = 0;
  for (int round = 0; round < 8 && tag == 0; ++round) {
    const int eps = order_equal_square_pairs(z);
    const std::size_t rho = z.size();
    const std::size_t delta = g.ys.size();
    if (rho == 0) {
      tag = 1;
    } else if (eps == 2) {
      if (sq(z[0]) == u) {
        tag = 5;
      } else {
        const GroupWord z1 = z[0], z2 = z[1];
        replace(0, mul(z1, z[2]), "z1*z3");
        replace(1, mul(z2, z[3]), "z2*z4");
      }
    } else if (eps == 1 && sq(z[0]) == u) {
      if (rho == 2) {
        tag = 2;
        break;
      }
      const std::size_t last = rho - 1;
      if (commutator(z[0], z[last]) == e)
        replace(0, mul(z[0], z[1]), "z1*z2");
      else if (commutator(z[1], z[last]) == e)
        replace(1, mul(z[0], z[1]), "z1*z2");
      const std::vector<GroupWord> tail(z.begin() + 2, z.end());
      if (!enumerate(sig, tail).contains(u)) {
        tag = 2;
        break;
      }
      std::size_t found = rho;
      for (std::size_t i = 2; i < rho && found == rho; ++i) {
        const bool c1 = commutator(z[0], z[i]) == e, c2 = commutator(z[1], z[i]) == e;
        if (c1 != c2) {
          if (c2) move_to(0, 1);
          found = i;
        }
      }
      if (found == rho || rho != 4) throw InvariantViolation("u-pair case with u in <U> has no reduction");
      move_to(found, 2);
      const GroupWord z1 = z[0], z2 = z[1];
      replace(0, mul(z1, z2), "z1*z2");
      replace(2, mul(z1, z[2]), "z1*z3");
    } else if (eps == 1) {
      if (rho == 2) {
        tag = 4;
        break;
      }
      std::size_t j = 2;
      while (j < rho && !(sq(z[j]) == u)) ++j;
      if (j == rho) throw InvariantViolation("non-u pair with rho >= 3 has no generator squaring to u");
      move_to(j, 2);
      if (commutator(z[0], z[2]) == e) move_to(0, 1);
      if (commutator(z[0], z[2]) == e) throw InvariantViolation("u-squared generator commutes with the pair");
      if (commutator(z[1], z[2]) == e) replace(1, mul(z[0], z[1]), "z1*z2");
      if (rho == 3) throw InvariantViolation("non-u pair with rho = 3 would make z1 z2 z3 central");
      replace(3, mul(z[0], z[3]), "z1*z4");
    } else {
      std::size_t i = 0;
      while (i < rho && !(sq(z[i]) == u)) ++i;
      if (i == rho) throw InvariantViolation("no generator squares to u while epsilon = 0");
      move_to(i, 0);
      // Smallest subset S of {z2..z_rho} whose squares multiply to u.
      const std::size_t rest = rho - 1;
      std::vector<std::uint64_t> masks;
      for (std::uint64_t mask = 1; rest < 64 && mask < (std::uint64_t{1} << rest); ++mask) masks.push_back(mask);
      std::stable_sort(masks.begin(), masks.end(),
                       [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
      bool reduced = false;
      for (auto mask : masks) {
        GroupWord p = e;
        for (std::size_t b = 0; b < rest; ++b)
          if ((mask >> b) & 1) p = mul(p, sq(z[b + 1]));
        if (!(p == u)) continue;
        GroupWord prod = e;
        std::string how;
        for (std::size_t b = 0; b < rest; ++b)
          if ((mask >> b) & 1) {
            prod = mul(prod, z[b + 1]);
            how += (how.empty() ? "" : "*") + zname(b + 1);
          }
        replace(static_cast<std::size_t>(std::countr_zero(mask)) + 1, prod, how);
        reduced = true;
        break;
      }
      if (reduced) continue;
      if (delta == 0) {
        tag = 3;
        break;
      }
      const CodeGroup zc = center(c);
      const GroupWord target = mul(u, sq(z[1]));
      const auto y = std::find_if(zc.elements().begin(), zc.elements().end(),
                                  [&](const GroupWord& w) { return sq(w) == target; });
      if (y == zc.elements().end()) throw InvariantViolation("no central y with y^2 = u z2^2");
      replace(0, mul(*y, z[0]), "y*z1 with y = (" + to_string(*y) + ")");
    }
  }
  if (tag == 0) throw InvariantViolation("shape classification did not terminate");

  shape.witness.epsilon = order_equal_square_pairs(z);
  if (tag == 3) {
    // The u-squared generator leads shape 3.
    auto it = std::find_if(z.begin(), z.end(), [&](const GroupWord& w) { return sq(w) == u; });
    std::rotate(z.begin(), it, it + 1);
  }
  shape.tag = tag;
  shape.structure = shape_structure(tag, g.type());
  if (!shape_relations_hold(tag, g))
    throw InvariantViolation("shape " + std::to_string(tag) + " witness fails its defining relations");
  if (!(enumerate(sig, g.all()) == c) || !has_unique_products(c, g))
    throw InvariantViolation("shape witness no longer generates the code");
  return shape;
}

long long max_rank_for_length(int m) {
  return m % 2 ? m + 1 + binom2((m + 1) / 2) : m + 2 + binom2(m / 2);
}

long long shape_rank_excess_bound(int tag, int m) {
  const bool odd = m % 2 != 0;
  switch (tag) {
    case 1: return odd ? binom2((m - 1) / 2) : binom2(m / 2);
    case 2: return 1 + (odd ? binom2((m - 1) / 2) : binom2(m / 2));
    case 3: return odd ? binom2((m + 1) / 2) : binom2(m / 2);
    case 4: return 1;
    case 5: return 3;
    default: throw std::invalid_argument("shape tag must be 1..5");
  }
}

bool shape_feasible(int tag, int m) {
  switch (tag) {
    case 1: return m >= 0;
    case 2:
    case 4: return m >= 2;
    case 3: return m >= 3;
    case 5: return m >= 5;
    default: return false;
  }
}

BoundReport normalized_set_bounds(const CodeGroup& c, const StructureReport& s, const NormalizedGenSet& ng) {
  BoundReport rep;
  const auto& g = ng.gens;
  const long long eps = ng.epsilon, sg = s.type.sigma, dl = s.type.delta, rh = s.type.rho;
  const auto sig = c.signature();
  const auto u = GroupWord::u_element(sig);

  rep.add("equal_square_pairs_le_2", eps, 2, eps <= 2);
  rep.add("two_pairs_force_delta_0_rho_4", eps, 2, eps != 2 || (dl == 0 && rh == 4));
  bool u_in_pair = false;
  for (long long i = 0; i < 2 * eps && i < rh; ++i) u_in_pair = u_in_pair || sq(g.zs[static_cast<std::size_t>(i)]) == u;
  rep.add("u_square_in_pair_forces_delta_0", dl, 0, !u_in_pair || dl == 0);

  std::vector<GroupWord> v = g.ys;
  for (long long i = 0; i < 2 * eps; i += 2) v.push_back(g.zs[static_cast<std::size_t>(i)]);
  for (auto i = static_cast<std::size_t>(2 * eps); i < g.zs.size(); ++i) v.push_back(g.zs[i]);
  int w_log = 0;
  generated_squares_avoid(sig, v, u, &w_log);
  std::vector<GroupWord> uset;
  for (const auto& w : v)
    if (!(sq(w) == u)) uset.push_back(w);
  const bool u_outside = !enumerate(sig, uset).contains(u);
  rep.add("square_span_lower_bound", w_log, dl + rh - eps - 1, w_log >= dl + rh - eps - 1);
  rep.add("square_span_exact_when_u_outside", w_log, dl + rh - eps, !u_outside || w_log == dl + rh - eps);
  rep.add("sigma_ge_delta_plus_rho_minus_eps_minus_1", sg, dl + rh - eps - 1, sg >= dl + rh - eps - 1);
  const long long swappers = eps <= 1 ? eps + binom2(dl + rh - eps) : 3;
  rep.add("rank_excess_le_swapper_count", s.h, swappers, s.h <= swappers);
  return rep;
}

BoundReport hadamard_pair_triple_checks(const CodeGroup& c, const CheckOptions& opt) {
  BoundReport rep;
  const auto u = GroupWord::u_element(c.signature());
  const CodeGroup t = torsion(c);
  std::vector<const GroupWord*> a;
  std::vector<GroupWord> squares;
  for (const auto& w : c.elements())
    if (!t.contains(w)) {
      a.push_back(&w);
      squares.push_back(sq(w));
    }

  const IndexPlan<2> pairs(a.size(), c.order() <= opt.exhaustive_pair_order, opt.samples, opt.seed);
  const auto commutator_in_square_span = [&](std::size_t i) {
    const auto [x, y] = pairs[i];
    if (squares[x] == u) return true;
    const auto cm = commutator(*a[x], *a[y]);
    return cm.is_identity() || cm == squares[x];
  };
  const auto bad1 = static_cast<long long>(count_failures(pairs.count(), commutator_in_square_span, opt.exec));
  rep.add("commutator_in_square_span_or_square_u", bad1, 0, bad1 == 0);

  const IndexPlan<3> triples(a.size(), c.order() <= opt.exhaustive_triple_order, opt.samples, opt.seed + 1);
  const auto in_t = [&](const GroupWord& w) { return t.contains(w); };
  const auto equal_square_triples = [&](std::size_t i) {
    const auto [x, y, z] = triples[i];
    if (!(squares[x] == squares[y]) || !(squares[x] == squares[z]) || squares[x] == u) return true;
    const auto xy = mul(*a[x], *a[y]);
    return in_t(xy) || in_t(mul(*a[x], *a[z])) || in_t(mul(*a[y], *a[z])) || in_t(mul(xy, *a[z]));
  };
  const auto swapper_pairs = [&](std::size_t i) {
    const auto [x, y, z] = triples[i];
    if (!(squares[x] == squares[y]) || squares[z] == squares[x]) return true;
    if (!(commutator(*a[x], *a[y]) == squares[x])) return true;
    const auto s1 = swapper(*a[x], *a[z]);
    const auto s2 = swapper(*a[y], *a[z]);
    return c.contains(s1) || c.contains(s2) || c.contains(mul(s1, s2));
  };
  const auto bad2 = static_cast<long long>(count_failures(triples.count(), equal_square_triples, opt.exec));
  const auto bad3 = static_cast<long long>(count_failures(triples.count(), swapper_pairs, opt.exec));
  rep.add("equal_square_triples_quotient_le_4", bad2, 0, bad2 == 0);
  rep.add("swapper_pair_quotient_le_2", bad3, 0, bad3 == 0);
  return rep;
}

BoundReport hadamard_bounds(const CodeGroup& c, const StructureReport& s, const Shape& shape, const CheckOptions& opt) {
  if (!s.m) throw NotHadamard();
  BoundReport rep;
  const long long m = *s.m, sg = s.type.sigma, dl = s.type.delta, rh = s.type.rho, k = s.kernel_dim, r = s.rank;
  const bool exception = m == 5 && sg == 2 && dl == 0 && rh == 4;
  const auto with_exception = [&](const char* name, long long lhs, long long rhs) {
    const bool ok = lhs <= rhs;
    rep.add(name, lhs, rhs, ok || exception, !ok && exception);
  };

  with_exception("ceil_half_m_le_sigma", (m + 1) / 2, sg);
  with_exception("ceil_half_m_le_kernel_dim", (m + 1) / 2, k);
  rep.add("sigma_le_kernel_dim", sg, k, sg <= k);
  rep.add("kernel_dim_le_m_plus_1", k, m + 1, k <= m + 1);
  rep.add("m_plus_1_le_rank", m + 1, r, m + 1 <= r);
  rep.add("type_sum_eq_m_plus_1", sg + dl + rh, m + 1, sg + dl + rh == m + 1);
  rep.add("rank_le_m_plus_1_plus_binom_delta_rho", r, m + 1 + binom2(dl + rh), r <= m + 1 + binom2(dl + rh));
  with_exception("delta_plus_rho_le_half_m_plus_2", dl + rh, (m + 2) / 2);
  rep.add("rank_le_length_maximum", r, max_rank_for_length(static_cast<int>(m)),
          r <= max_rank_for_length(static_cast<int>(m)));
  const long long excess = shape_rank_excess_bound(shape.tag, static_cast<int>(m));
  rep.add("rank_excess_le_shape_bound", r - (m + 1), excess, r - (m + 1) <= excess);

  switch (shape.tag) {
    case 1:
      if (c.signature().k3 == 0) {
        if (c.signature().k1 == 0) {
          if (dl <= 2)
            rep.add("abelian_small_delta_linear", r, k, s.is_linear);
          else {
            rep.add("abelian_kernel_dim_exact", k, sg + 1, k == sg + 1);
            rep.add("abelian_rank_exact", r, sg + dl + binom2(dl - 1), r == sg + dl + binom2(dl - 1));
          }
        } else {
          rep.add("abelian_sigma_gt_delta", sg, dl + 1, sg > dl);
          if (dl <= 1)
            rep.add("abelian_small_delta_linear", r, k, s.is_linear);
          else {
            rep.add("abelian_kernel_dim_exact", k, sg, k == sg);
            rep.add("abelian_rank_exact", r, sg + dl + binom2(dl), r == sg + dl + binom2(dl));
          }
        }
      }
      break;
    case 2:
      rep.add("shape_sigma_ge_rho_minus_1", sg, rh - 1, sg >= rh - 1);
      rep.add("shape_rank_bound", r, sg + rh + 1 + binom2(rh - 1), r <= sg + rh + 1 + binom2(rh - 1));
      break;
    case 3:
      rep.add("shape_sigma_ge_rho", sg, rh, sg >= rh);
      rep.add("shape_rank_bound", r, sg + rh + binom2(rh), r <= sg + rh + binom2(rh));
      break;
    case 4:
      rep.add("shape_sigma_ge_delta_plus_1", sg, dl + 1, sg >= dl + 1);
      rep.add("shape_rank_bound", r, sg + dl + rh + 1, r <= sg + dl + rh + 1);
      rep.add("shape_rank_bound_chain", sg + dl + rh + 1, sg + 4, sg + dl + rh + 1 <= sg + 4);
      break;
    case 5:
      rep.add("shape_sigma_ge_2", sg, 2, sg >= 2);
      rep.add("shape_rank_bound", r, sg + 7, r <= sg + 7);
      break;
    default: break;
  }

  rep.append(normalized_set_bounds(c, s, normalize_generators(c)));
  rep.append(hadamard_pair_triple_checks(c, opt));
  return rep;
}

std::vector<BinaryVector> puncture(const std::vector<BinaryVector>& code, std::size_t position) {
  std::vector<BinaryVector> out;
  out.reserve(code.size());
  for (const auto& v : code) {
    if (position >= v.size()) throw std::invalid_argument("puncture position out of range");
    BinaryVector p(v.size() - 1);
    for (std::size_t i = 0, j = 0; i < v.size(); ++i)
      if (i != position) p.set(j++, v.get(i));
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_perfect(const std::vector<BinaryVector>& code, std::size_t n, Exec exec) {
  if (n > 16) throw std::invalid_argument("perfect-code check needs n <= 16, got " + std::to_string(n));
  if (code.empty() || code.size() * (n + 1) != (std::size_t{1} << n)) return false;
  return covering_radius(code, n, exec) == 1;
}

bool is_perfect(const CodeGroup& c, Exec exec) {
  return is_perfect(gray_images(c), static_cast<std::size_t>(c.signature().n()), exec);
}

bool is_extended_perfect(const CodeGroup& c, bool any_position, Exec exec) {
  const auto code = gray_images(c);
  const auto n = static_cast<std::size_t>(c.signature().n());
  if (n > 17) throw std::invalid_argument("extended-perfect check needs n <= 17, got " + std::to_string(n));
  if (n < 2) return false;
  for (const auto& v : code)
    if (v.weight() % 2) return false;
  const std::size_t positions = any_position ? n : 1;
  for (std::size_t p = 0; p < positions; ++p) {
    const auto punctured = puncture(code, p);
    if (punctured.size() == code.size() && is_perfect(punctured, n - 1, exec)) return true;
  }
  return false;
}

}  // namespace z2z4q8
