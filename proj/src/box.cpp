#include "slownim/box.hpp"

#include <limits>

namespace slownim {

namespace {

constexpr Rank kSaturated = std::numeric_limits<Rank>::max();

Rank sat_add(Rank a, Rank b) noexcept { return a > kSaturated - b ? kSaturated : a + b; }

}  // namespace

Rank box_size(int n, int cap) noexcept {
  if (n < 0 || cap < 0) return 0;
  // C(cap + n, n) via the multiplicative formula in 128-bit.
  unsigned __int128 acc = 1;
  for (int i = 1; i <= n; ++i) {
    acc = acc * static_cast<unsigned>(cap + i) / static_cast<unsigned>(i);
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<Rank>(acc);
}

BoxIndexer::BoxIndexer(int n, int cap)
    : n_(n), cap_(cap), size_(box_size(n, cap)), stride_(static_cast<std::size_t>(n) + 1) {
  if (n < 1 || n > static_cast<int>(kMaxPiles)) throw Error(ErrorKind::invalid_input, "bad pile count");
  if (cap < 0 || cap > kMaxPileValue) throw Error(ErrorKind::invalid_input, "bad cap");
  const int rows = cap + n + 1;
  binom_.assign(static_cast<std::size_t>(rows) * stride_, 0);
  for (int v = 0; v < rows; ++v) {
    binom_[static_cast<std::size_t>(v) * stride_] = 1;
    for (int r = 1; r <= n && r <= v; ++r) {
      binom_[static_cast<std::size_t>(v) * stride_ + r] =
          sat_add(choose(v - 1, r - 1), r <= v - 1 ? choose(v - 1, r) : 0);
    }
  }
}

Rank BoxIndexer::rank_unchecked(const Position& x) const noexcept {
  Rank r = 0;
  for (int i = 0; i < n_; ++i) r += choose(x[i] + i, i + 1);
  return r;
}

Rank BoxIndexer::rank(const Position& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw Error(ErrorKind::invalid_input, "rank: expected " + std::to_string(n_) + " piles");
  }
  if (x.back() > cap_) {
    throw Error(ErrorKind::out_of_box,
                x.to_string() + " exceeds box cap " + std::to_string(cap_));
  }
  return rank_unchecked(x);
}

Position BoxIndexer::unrank(Rank r) const {
  if (r >= size_) throw Error(ErrorKind::out_of_box, "rank " + std::to_string(r) + " outside box");
  std::array<Pile, kMaxPiles> piles{};
  int c = cap_ + n_ - 1;
  for (int i = n_ - 1; i >= 0; --i) {
    while (choose(c, i + 1) > r) --c;
    r -= choose(c, i + 1);
    piles[i] = static_cast<Pile>(c - i);
    --c;
  }
  return Position::from_sorted(std::span<const Pile>(piles.data(), static_cast<std::size_t>(n_)));
}

BoxRange::BoxRange(int n, int cap) : n_(n), cap_(cap) {
  if (n < 1 || n > static_cast<int>(kMaxPiles)) throw Error(ErrorKind::invalid_input, "bad pile count");
  if (cap < 0 || cap > kMaxPileValue) throw Error(ErrorKind::invalid_input, "bad cap");
}

BoxRange::iterator::iterator(int n, int cap) : n_(n), cap_(cap), done_(false) {
  cur_ = Position::from_sorted(std::span<const Pile>(buf_.data(), static_cast<std::size_t>(n)));
}

BoxRange::iterator& BoxRange::iterator::operator++() {
  // Bump the leftmost entry that can grow, zero everything before it.
  for (int i = 0; i < n_; ++i) {
    const int limit = i + 1 < n_ ? buf_[i + 1] : cap_;
    if (buf_[i] < limit) {
      ++buf_[i];
      for (int j = 0; j < i; ++j) buf_[j] = 0;
      cur_ = Position::from_sorted(std::span<const Pile>(buf_.data(), static_cast<std::size_t>(n_)));
      return *this;
    }
  }
  done_ = true;
  return *this;
}

}  // namespace slownim
