#include "ldpcball/bitvector.hpp"

#include <bit>
#include <string>

#include "ldpcball/errors.hpp"

namespace ldpcball {

namespace {

std::size_t words_for(std::size_t n) { return (n + BitVector::word_bits - 1) / BitVector::word_bits; }

}  // namespace

BitVector::BitVector(std::size_t n) : n_(n), words_(words_for(n), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i + 1);
    } else if (bits[i] != '0') {
      throw ParseError("bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::from_support(std::size_t n, std::span<const std::size_t> support) {
  BitVector v(n);
  for (auto i : support) v.set(i);
  return v;
}

BitVector BitVector::unit(std::size_t n, std::size_t i) {
  BitVector v(n);
  v.set(i);
  return v;
}

BitVector BitVector::from_word(std::size_t n, word_type word) {
  if (n > word_bits) throw DomainError("from_word requires n <= 64");
  BitVector v(n);
  if (n == 0) return v;
  const word_type mask = n == word_bits ? ~word_type{0} : ((word_type{1} << n) - 1);
  v.words_[0] = word & mask;
  return v;
}

void BitVector::check_index(std::size_t i) const {
  if (i == 0 || i > n_) {
    throw DomainError("coordinate " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
}

void BitVector::check_same_length(const BitVector& other) const {
  if (other.n_ != n_) {
    throw DomainError("length mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
  }
}

bool BitVector::get(std::size_t i) const {
  check_index(i);
  return (words_[(i - 1) / word_bits] >> ((i - 1) % word_bits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
  check_index(i);
  const word_type bit = word_type{1} << ((i - 1) % word_bits);
  if (value) {
    words_[(i - 1) / word_bits] |= bit;
  } else {
    words_[(i - 1) / word_bits] &= ~bit;
  }
}

void BitVector::flip(std::size_t i) {
  check_index(i);
  words_[(i - 1) / word_bits] ^= word_type{1} << ((i - 1) % word_bits);
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const noexcept {
  for (auto word : words_) {
    if (word != 0) return false;
  }
  return true;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    word_type word = words_[k];
    while (word != 0) {
      out.push_back(k * word_bits + static_cast<std::size_t>(std::countr_zero(word)) + 1);
      word &= word - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(n_, '0');
  for (auto i : support()) s[i - 1] = '1';
  return s;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::size_t BitVector::overlap(const BitVector& other) const {
  check_same_length(other);
  std::size_t c = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
  }
  return c;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  }
  return true;
}

BitVector xor_add(const BitVector& a, const BitVector& b) {
  BitVector out = a;
  out ^= b;
  return out;
}

std::strong_ordering lex_compare(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw DomainError("lex_compare: length mismatch");
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t k = 0; k < wa.size(); ++k) {
    const auto diff = wa[k] ^ wb[k];
    if (diff == 0) continue;
    // Lowest differing bit is the first differing coordinate; the side holding 0 is smaller.
    const auto bit = diff & (~diff + 1);
    return (wa[k] & bit) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace ldpcball
