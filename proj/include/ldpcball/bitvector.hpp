#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldpcball {

/// Fixed-length vector over GF(2), packed 64 coordinates per word.
///
/// Coordinates are numbered 1..n in every public accessor. Coordinate i is
/// stored in bit (i-1) % 64 of word (i-1) / 64; bits past n are always zero.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t n);

  /// Parses a string of '0'/'1' characters, coordinate 1 first.
  static BitVector from_string(std::string_view bits);
  /// Builds a vector of length n from 1-based support indices.
  static BitVector from_support(std::size_t n, std::span<const std::size_t> support);
  static BitVector unit(std::size_t n, std::size_t i);
  /// Low n bits of `word` (bit 0 = coordinate 1). Requires n <= 64.
  static BitVector from_word(std::size_t n, word_type word);

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  /// Strictly increasing 1-based indices of the set coordinates.
  std::vector<std::size_t> support() const;
  std::string to_string() const;

  /// Lowest word; the whole vector when n <= 64.
  word_type low_word() const noexcept { return words_.empty() ? 0 : words_.front(); }
  std::span<const word_type> words() const noexcept { return words_; }

  BitVector& operator^=(const BitVector& other);
  /// Number of coordinates set in both vectors.
  std::size_t overlap(const BitVector& other) const;
  /// True when every set coordinate of *this is set in `other`.
  bool is_subset_of(const BitVector& other) const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void check_index(std::size_t i) const;
  void check_same_length(const BitVector& other) const;

  std::size_t n_ = 0;
  std::vector<word_type> words_;
};

/// Componentwise XOR. Throws DomainError on length mismatch.
BitVector xor_add(const BitVector& a, const BitVector& b);

/// Lexicographic order with coordinate 1 most significant and 0 < 1.
std::strong_ordering lex_compare(const BitVector& a, const BitVector& b);

}  // namespace ldpcball
