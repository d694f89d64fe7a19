#include "z2z4q8/binary.hpp"

#include <algorithm>
#include <stdexcept>

namespace z2z4q8 {

BinaryVector BinaryVector::from_string(std::string_view bits) {
  BinaryVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("binary vector literal must contain only 0 and 1");
  }
  return v;
}

BinaryVector BinaryVector::ones(std::size_t n) {
  BinaryVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, true);
  return v;
}

BinaryVector& BinaryVector::operator+=(const BinaryVector& o) {
  if (o.n_ != n_) throw std::invalid_argument("binary vector length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

std::size_t BinaryVector::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ n_;
  for (auto w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string BinaryVector::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::size_t weight(const BinaryVector& v) { return v.weight(); }

std::size_t distance(const BinaryVector& u, const BinaryVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("binary vector length mismatch");
  std::size_t d = 0;
  for (std::size_t w = 0; w < u.words().size(); ++w) d += static_cast<std::size_t>(std::popcount(u.words()[w] ^ v.words()[w]));
  return d;
}

BinaryVector complement(const BinaryVector& v) { return v + BinaryVector::ones(v.size()); }

CoordinatePermutation CoordinatePermutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  return CoordinatePermutation(std::move(image));
}

CoordinatePermutation::CoordinatePermutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto i : image_) {
    if (i >= image_.size() || hit[i]) throw std::invalid_argument("not a permutation");
    hit[i] = true;
  }
}

bool CoordinatePermutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

void CoordinatePermutation::swap_positions(std::size_t i, std::size_t j) { std::swap(image_[i], image_[j]); }

BinaryVector CoordinatePermutation::apply(const BinaryVector& v) const {
  if (v.size() != image_.size()) throw std::invalid_argument("permutation length mismatch");
  BinaryVector out(v.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (v.get(i)) out.set(image_[i], true);
  return out;
}

CoordinatePermutation CoordinatePermutation::compose(const CoordinatePermutation& q) const {
  if (q.size() != size()) throw std::invalid_argument("permutation length mismatch");
  std::vector<std::size_t> image(size());
  for (std::size_t i = 0; i < size(); ++i) image[i] = image_[q.image_[i]];
  return CoordinatePermutation(std::move(image));
}

CoordinatePermutation CoordinatePermutation::inverse() const {
  std::vector<std::size_t> image(size());
  for (std::size_t i = 0; i < size(); ++i) image[image_[i]] = i;
  return CoordinatePermutation(std::move(image));
}

std::string CoordinatePermutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
      i = image_[i];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool Gf2Basis::insert(const BinaryVector& v) {
  if (v.size() != n_) throw std::invalid_argument("binary vector length mismatch");
  BinaryVector r = reduce(v);
  if (r.is_zero()) return false;
  const std::size_t p = r.leading();
  for (auto& row : rows_)
    if (row.get(p)) row += r;
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

BinaryVector Gf2Basis::reduce(BinaryVector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v += rows_[i];
  return v;
}

std::size_t gf2_rank(const std::vector<BinaryVector>& vectors) {
  if (vectors.empty()) return 0;
  Gf2Basis basis(vectors.front().size());
  for (const auto& v : vectors) {
    basis.insert(v);
    if (basis.rank() == v.size()) break;
  }
  return basis.rank();
}

}  // namespace z2z4q8
