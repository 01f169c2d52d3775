#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slownim/error.hpp"

namespace slownim {

using Pile = std::uint16_t;

inline constexpr std::size_t kMaxPiles = 16;
inline constexpr int kMaxPileValue = 0xFFFF;

/// A game position: pile sizes kept sorted non-decreasing at all times.
///
/// Storage is inline so positions are cheap to copy and hash inside the
/// table kernels. Unused slots are kept zero so defaulted comparison works.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<int> raw);

  /// Sorts `raw`; throws invalid_input on empty input, negative or oversized
  /// entries, or more than kMaxPiles piles.
  static Position canonicalize(std::span<const int> raw);

  /// Adopts `piles` without sorting. Caller guarantees non-decreasing order.
  static Position from_sorted(std::span<const Pile> piles);

  /// Parses "1,2,3" (whitespace tolerated) and canonicalizes.
  static Position parse(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  Pile operator[](std::size_t i) const noexcept { return piles_[i]; }
  std::span<const Pile> piles() const noexcept { return {piles_.data(), size_}; }
  const Pile* begin() const noexcept { return piles_.data(); }
  const Pile* end() const noexcept { return piles_.data() + size_; }

  Pile back() const noexcept { return piles_[size_ - 1]; }
  long long sum() const noexcept;
  std::size_t nonzero_count() const noexcept;

  /// First `count` piles; still canonical.
  Position prefix(std::size_t count) const;
  /// Appends a pile; throws invalid_input if it would break ordering.
  Position extended(Pile value) const;

  std::vector<int> to_vector() const;
  std::string to_string() const;

  friend bool operator==(const Position&, const Position&) = default;
  friend std::strong_ordering operator<=>(const Position& a, const Position& b);

 private:
  std::array<Pile, kMaxPiles> piles_{};
  std::uint8_t size_ = 0;

  friend class PositionBuilder;
};

/// Mutable scratch used by the kernels: decrement entries in place, then
/// seal into a canonical Position.
class PositionBuilder {
 public:
  explicit PositionBuilder(const Position& from) : p_(from) {}
  void decrement(std::size_t i) noexcept { --p_.piles_[i]; }
  void set(std::size_t i, Pile v) noexcept { p_.piles_[i] = v; }
  Pile operator[](std::size_t i) const noexcept { return p_.piles_[i]; }
  Position sorted() &&;
  /// Only valid when the edits preserved order.
  Position assume_sorted() && { return p_; }

 private:
  Position p_;
};

enum class Version : std::uint8_t { normal = 0, misere = 1 };

std::string_view to_string(Version v) noexcept;
Version parse_version(std::string_view text);

/// Pile count, piles reduced per move, and play version.
struct GameSpec {
  int n = 0;
  int k = 0;
  Version version = Version::normal;

  static GameSpec make(int n, int k, Version version);
  /// The k = n - 1 game.
  static GameSpec keep_one(int n, Version version) { return make(n, n - 1, version); }

  bool is_keep_one() const noexcept { return k == n - 1; }
  std::string to_string() const;

  friend bool operator==(const GameSpec&, const GameSpec&) = default;
  friend auto operator<=>(const GameSpec&, const GameSpec&) = default;
};

/// The set of reduced pile indices, as a bitmask over the sorted position.
struct MoveChoice {
  std::uint32_t reduced = 0;

  int count() const noexcept;
  std::vector<int> reduced_indices() const;
  /// For k = n - 1: the single index left alone, or -1 if not exactly one.
  int kept_index(int n) const noexcept;

  static MoveChoice keep(int kept, int n) noexcept;

  friend bool operator==(const MoveChoice&, const MoveChoice&) = default;
};

struct Move {
  MoveChoice choice;
  Position next;
};

bool is_terminal(const Position& x, const GameSpec& spec);

/// Distinct canonical successors, one representative choice each (the
/// lexicographically lowest reduced-index set). Order follows that choice.
std::vector<Move> successors(const Position& x, const GameSpec& spec);

/// Callback form used by the table kernels; no allocation. Preconditions
/// (length, k) are the caller's responsibility.
template <typename Fn>
void for_each_successor(const Position& x, int k, Fn&& fn);

Position apply_keep(const Position& x, int kept_index, const GameSpec& spec);

struct PositionHash {
  std::size_t operator()(const Position& p) const noexcept;
};

// ---------------------------------------------------------------------------

namespace detail {

// Reducing the first r entries of a run of equal piles keeps the vector
// sorted, and every distinct successor arises from exactly one such choice.
template <typename Fn>
void successor_blocks(const Position& x, std::size_t start, int remaining,
                      PositionBuilder& scratch, std::uint32_t mask, Fn& fn) {
  const std::size_t n = x.size();
  if (remaining == 0) {
    fn(MoveChoice{mask}, PositionBuilder(scratch).assume_sorted());
    return;
  }
  if (start >= n) return;
  std::size_t end = start;
  while (end < n && x[end] == x[start]) ++end;
  const int len = static_cast<int>(end - start);
  int avail_after = 0;
  for (std::size_t j = end; j < n; ++j) avail_after += x[j] > 0 ? 1 : 0;
  const int max_take = x[start] == 0 ? 0 : std::min(len, remaining);
  // Take more from earlier blocks first: lexicographic order of index sets.
  for (int take = max_take; take >= 0; --take) {
    if (remaining - take > avail_after) break;
    std::uint32_t m = mask;
    for (int t = 0; t < take; ++t) {
      scratch.decrement(start + t);
      m |= 1u << (start + t);
    }
    successor_blocks(x, end, remaining - take, scratch, m, fn);
    for (int t = 0; t < take; ++t) scratch.set(start + t, x[start + t]);
  }
}

}  // namespace detail

template <typename Fn>
void for_each_successor(const Position& x, int k, Fn&& fn) {
  if (static_cast<int>(x.nonzero_count()) < k) return;
  PositionBuilder scratch(x);
  detail::successor_blocks(x, 0, k, scratch, 0u, fn);
}

}  // namespace slownim
