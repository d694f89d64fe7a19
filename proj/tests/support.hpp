#pragma once

// Shared helpers for the unit tests. The oracles here avoid the library's
// own algorithms: they work from element lists and plain integer arithmetic.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "z2z4q8/binary.hpp"
#include "z2z4q8/group.hpp"
#include "z2z4q8/io.hpp"
#include "z2z4q8/subgroup.hpp"

namespace testing {

using namespace z2z4q8;

inline GroupWord word(const GroupSignature& sig, std::string_view tokens) { return parse_element(sig, tokens); }

inline CodeGroup group(const GroupSignature& sig, std::initializer_list<std::string_view> gens) {
  std::vector<GroupWord> g;
  for (auto t : gens) g.push_back(word(sig, t));
  return enumerate(sig, g);
}

/// Closure by repeated multiplication until nothing new appears.
inline std::set<GroupWord> closure(const GroupSignature& sig, const std::vector<GroupWord>& gens) {
  std::set<GroupWord> s{GroupWord::identity(sig)};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<GroupWord> cur(s.begin(), s.end());
    for (const auto& x : cur)
      for (const auto& g : gens)
        if (s.insert(mul(x, g)).second) grew = true;
  }
  return s;
}

inline std::set<GroupWord> as_set(const CodeGroup& c) { return {c.elements().begin(), c.elements().end()}; }

/// Dense GF(2) elimination on 0/1 rows.
inline int naive_rank(std::vector<std::vector<int>> rows) {
  int r = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < rows.size() && !rows[piv][col]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<std::size_t>(r) && rows[i][col])
        for (std::size_t j = 0; j < n; ++j) rows[i][j] ^= rows[static_cast<std::size_t>(r)][j];
    ++r;
  }
  return r;
}

inline std::vector<int> bits_of(const BinaryVector& v) {
  std::vector<int> b(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) b[i] = v.get(i) ? 1 : 0;
  return b;
}

inline std::size_t log2_size(std::size_t v) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < v) ++k;
  return k;
}

}  // namespace testing
