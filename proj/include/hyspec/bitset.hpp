#ifndef HYSPEC_BITSET_HPP
#define HYSPEC_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace hyspec {

// Fixed-size bitset sized at runtime. Element universes here are small
// (ring elements, lattice ideals, subspace points), so a word vector is
// plenty.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : size_(n), w_((n + 63) / 64, 0) {}

  static Bitset full(std::size_t n) {
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i);
    return b;
  }

  std::size_t size() const { return size_; }

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.w_ == b.w_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  // Lexicographic on words, low indices first; used for canonical ordering
  // of ideals with equal cardinality.
  friend bool operator<(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.w_.size() && i < b.w_.size(); ++i)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return a.size_ < b.size_;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i)) out.push_back(static_cast<int>(i));
    return out;
  }

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace hyspec

#endif
