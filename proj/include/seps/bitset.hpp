#pragma once

// Dynamic bitset over a fixed universe size. Element sets, order rows and
// down-set masks are all represented this way.

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace seps {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
    assert(universe >= 0);
  }

  static Bitset full(int universe) {
    Bitset b(universe);
    for (auto& w : b.words_) w = ~uint64_t{0};
    b.trim();
    return b;
  }

  static Bitset of(int universe, std::initializer_list<int> bits) {
    Bitset b(universe);
    for (int i : bits) b.set(i);
    return b;
  }

  int universe_size() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  void assign(int i, bool v) { v ? set(i) : reset(i); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Index of the least set bit, or -1.
  int first() const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return int(k * 64 + __builtin_ctzll(words_[k]));
    return -1;
  }
  // Least set bit strictly above i, or -1.
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t k = size_t(i) >> 6;
    uint64_t w = words_[k] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (w) return int(k * 64 + __builtin_ctzll(w));
      if (++k == words_.size()) return -1;
      w = words_[k];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  Bitset complement() const {
    Bitset b(*this);
    for (auto& w : b.words_) w = ~w;
    b.trim();
    return b;
  }
  // Set difference: bits of *this not in o.
  Bitset minus(const Bitset& o) const {
    assert(n_ == o.n_);
    Bitset b(*this);
    for (size_t k = 0; k < words_.size(); ++k) b.words_[k] &= ~o.words_[k];
    return b;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  // Numeric order (bit i has weight 2^i); total and deterministic.
  bool operator<(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t k = words_.size(); k-- > 0;)
      if (words_[k] != o.words_[k]) return words_[k] < o.words_[k];
    return false;
  }

  // Low 64 bits as an integer; only meaningful when the universe fits.
  uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  std::string to_string() const {
    std::string s;
    s.reserve(n_);
    for (int i = 0; i < n_; ++i) s.push_back(test(i) ? '1' : '0');
    return s;
  }

 private:
  void trim() {
    if (n_ & 63) words_.back() &= (~uint64_t{0}) >> (64 - (n_ & 63));
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace seps
