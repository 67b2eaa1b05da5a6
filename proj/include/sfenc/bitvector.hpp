#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sfenc {

/// Fixed-length bit vector packed into 64-bit words. Bits past size() are
/// always zero, so word-wise comparison and hashing are exact.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }
  std::size_t num_words() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }

  bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;

  /// Parity of popcount(*this & other).
  bool dot(const BitVector& other) const;
  std::size_t and_count(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  friend bool operator==(const BitVector& a, const BitVector& b) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) = default;

  /// Lowest set bit index, or size() when none.
  std::size_t first_set() const;

  /// '0'/'1' string, bit 0 first.
  std::string to_string() const;

  std::size_t hash() const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace sfenc

template <>
struct std::hash<sfenc::BitVector> {
  std::size_t operator()(const sfenc::BitVector& v) const { return v.hash(); }
};
