#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "slownim/position.hpp"

namespace slownim {

using Rank = std::uint64_t;

/// Number of canonical positions with n piles and entries <= cap, i.e.
/// C(cap + n, n). Saturates at UINT64_MAX.
Rank box_size(int n, int cap) noexcept;

/// Colexicographic combinadic ranking of the box {sorted x : x_i <= cap}.
///
/// A sorted vector x maps to the strictly increasing c_i = x_i + i, and
/// rank(x) = sum_i C(c_i, i + 1). The rank does not depend on cap, so the
/// table for a smaller cap is a prefix of the table for a larger one, and
/// every successor ranks strictly below its parent.
class BoxIndexer {
 public:
  BoxIndexer(int n, int cap);

  int piles() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }
  Rank size() const noexcept { return size_; }

  /// Throws out_of_box if an entry exceeds cap, invalid_input on length.
  Rank rank(const Position& x) const;
  /// No checks; kernels call this with successors of in-box positions.
  Rank rank_unchecked(const Position& x) const noexcept;
  Position unrank(Rank r) const;

 private:
  Rank choose(int v, int r) const noexcept { return binom_[static_cast<std::size_t>(v) * stride_ + r]; }

  int n_;
  int cap_;
  Rank size_;
  std::size_t stride_;
  std::vector<Rank> binom_;
};

/// Iterates a box in colexicographic order (== rank order).
class BoxRange {
 public:
  class iterator {
   public:
    using value_type = Position;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const Position& operator*() const noexcept { return cur_; }
    const Position* operator->() const noexcept { return &cur_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class BoxRange;
    iterator(int n, int cap);
    Position cur_;
    std::array<Pile, kMaxPiles> buf_{};
    int n_ = 0;
    int cap_ = 0;
    bool done_ = true;
  };

  BoxRange(int n, int cap);
  iterator begin() const { return iterator(n_, cap_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
  int cap_;
};

inline BoxRange enumerate_box(int n, int cap) { return BoxRange(n, cap); }

}  // namespace slownim
