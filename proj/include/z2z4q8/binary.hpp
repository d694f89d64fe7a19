#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace z2z4q8 {

/// Element of Z2^n, packed 64 coordinates per word; coordinate 0 is bit 0 of word 0.
class BinaryVector {
 public:
  BinaryVector() = default;
  explicit BinaryVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  /// From a 0/1 string, first coordinate leftmost.
  [[nodiscard]] static BinaryVector from_string(std::string_view bits);
  [[nodiscard]] static BinaryVector ones(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i, bool v) noexcept {
    const std::uint64_t bit = 1ULL << (i % 64);
    words_[i / 64] = v ? (words_[i / 64] | bit) : (words_[i / 64] & ~bit);
  }
  void flip(std::size_t i) noexcept { words_[i / 64] ^= 1ULL << (i % 64); }

  [[nodiscard]] const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  [[nodiscard]] std::vector<std::uint64_t>& words() noexcept { return words_; }

  [[nodiscard]] std::size_t weight() const noexcept {
    std::size_t s = 0;
    for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
    return s;
  }
  [[nodiscard]] bool is_zero() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  /// Index of the first set coordinate, or size() if zero.
  [[nodiscard]] std::size_t leading() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return n_;
  }

  BinaryVector& operator+=(const BinaryVector& o);
  friend BinaryVector operator+(BinaryVector a, const BinaryVector& b) { return a += b; }
  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
  friend auto operator<=>(const BinaryVector& a, const BinaryVector& b) {
    return std::tie(a.n_, a.words_) <=> std::tie(b.n_, b.words_);
  }

  [[nodiscard]] std::size_t hash() const noexcept;
  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BinaryVectorHash {
  std::size_t operator()(const BinaryVector& v) const noexcept { return v.hash(); }
};

[[nodiscard]] std::size_t weight(const BinaryVector& v);
[[nodiscard]] std::size_t distance(const BinaryVector& u, const BinaryVector& v);
[[nodiscard]] BinaryVector complement(const BinaryVector& v);

/// Bijection on coordinates, stored as the image of each 0-based index.
///
/// Acting on a vector follows (pi(v))_i = v_{pi^-1(i)}.
class CoordinatePermutation {
 public:
  CoordinatePermutation() = default;
  [[nodiscard]] static CoordinatePermutation identity(std::size_t n);
  explicit CoordinatePermutation(std::vector<std::size_t> image);

  [[nodiscard]] std::size_t size() const noexcept { return image_.size(); }
  [[nodiscard]] std::size_t operator()(std::size_t i) const noexcept { return image_[i]; }
  [[nodiscard]] const std::vector<std::size_t>& image() const noexcept { return image_; }
  [[nodiscard]] bool is_identity() const noexcept;

  void swap_positions(std::size_t i, std::size_t j);

  [[nodiscard]] BinaryVector apply(const BinaryVector& v) const;
  /// (p * q)(i) = p(q(i)).
  [[nodiscard]] CoordinatePermutation compose(const CoordinatePermutation& q) const;
  [[nodiscard]] CoordinatePermutation inverse() const;

  /// Disjoint cycle notation with 1-based indices, "()" for the identity.
  [[nodiscard]] std::string to_cycle_string() const;

  friend bool operator==(const CoordinatePermutation&, const CoordinatePermutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Reduced row-echelon basis of a subspace of Z2^n.
///
/// Pivots are the leading (lowest-index) coordinate of each row, and every
/// pivot column is cleared from all other rows.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t n) : n_(n) {}

  /// Returns true if v was independent of the current rows.
  bool insert(const BinaryVector& v);
  [[nodiscard]] BinaryVector reduce(BinaryVector v) const;
  [[nodiscard]] bool contains(const BinaryVector& v) const { return reduce(v).is_zero(); }
  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] const std::vector<BinaryVector>& rows() const noexcept { return rows_; }

 private:
  std::size_t n_;
  std::vector<BinaryVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Dimension of the binary span of `vectors`.
[[nodiscard]] std::size_t gf2_rank(const std::vector<BinaryVector>& vectors);

}  // namespace z2z4q8
