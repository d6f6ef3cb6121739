#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fitset {

/// Fixed-capacity bitset used both for element masks (bits = element
/// indices of one group) and for subgroup-id sets over one lattice.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static Bitset all(int nbits) {
    Bitset b(nbits);
    for (int w = 0; w < static_cast<int>(b.words_.size()); ++w)
      b.words_[w] = ~uint64_t{0};
    b.trim();
    return b;
  }

  int capacity() const { return nbits_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference: remove o's bits.
  Bitset& operator-=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const = default;

  /// Deterministic strict order (capacity, then word-lexicographic).
  bool operator<(const Bitset& o) const {
    if (nbits_ != o.nbits_) return nbits_ < o.nbits_;
    return words_ < o.words_;
  }

  int first() const { return next(-1); }

  /// Next set bit strictly after `after`, or -1.
  int next(int after) const {
    int i = after + 1;
    if (i >= nbits_) return -1;
    int w = i >> 6;
    uint64_t cur = words_[w] >> (i & 63);
    if (cur) return i + std::countr_zero(cur);
    for (++w; w < static_cast<int>(words_.size()); ++w)
      if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
    return v;
  }

  size_t hash() const {
    size_t h = static_cast<size_t>(nbits_) * 0x9e3779b97f4a7c15ULL;
    for (uint64_t w : words_) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }

 private:
  void trim() {
    if (nbits_ & 63) words_.back() &= (uint64_t{1} << (nbits_ & 63)) - 1;
  }

  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace fitset
