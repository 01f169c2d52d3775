#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "slownim/position.hpp"

namespace slownim {

using Remoteness = std::uint16_t;

enum class Winner : std::uint8_t { N, P };

inline char to_char(Winner w) noexcept { return w == Winner::N ? 'N' : 'P'; }
inline Winner winner_from_remoteness(unsigned r) noexcept { return r % 2 ? Winner::N : Winner::P; }

/// Terminal remoteness: 0 in normal play, 1 in misère so that "odd" still
/// means the player to move wins.
inline constexpr Remoteness terminal_remoteness(Version v) noexcept {
  return v == Version::misere ? 1 : 0;
}

/// Smith's recurrence folded over successor values: if some successor is
/// even, 1 + the smallest even one; otherwise 1 + the largest.
class RemotenessFold {
 public:
  void add(Remoteness r) noexcept {
    any_ = true;
    if (r % 2 == 0) {
      if (r < min_even_) min_even_ = r;
    } else if (r > max_odd_) {
      max_odd_ = r;
    }
  }
  Remoteness result(Version v) const noexcept {
    if (!any_) return terminal_remoteness(v);
    if (min_even_ != kNone) return static_cast<Remoteness>(min_even_ + 1);
    return static_cast<Remoteness>(max_odd_ + 1);
  }

 private:
  static constexpr Remoteness kNone = 0xFFFF;
  Remoteness min_even_ = kNone;
  Remoteness max_odd_ = 0;
  bool any_ = false;
};

/// Keep-index of a representative move: the largest index among the piles
/// equal to the kept one. Returns -1 unless the choice reduces all but one.
int representative_keep(const Position& x, MoveChoice choice);

/// Memoized remoteness / SG evaluation for one game spec.
///
/// Evaluation walks an explicit stack, so deep positions do not consume call
/// stack. The memo is sharded; concurrent callers share results and a value,
/// once published, never changes.
class Solver {
 public:
  explicit Solver(GameSpec spec);
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  const GameSpec& spec() const noexcept { return spec_; }

  Remoteness remoteness(const Position& x);
  Winner winner(const Position& x) { return winner_from_remoteness(remoteness(x)); }

  /// Successors y with R(y) = R(x) - 1. Throws no_moves on terminal input.
  std::vector<Move> optimal_moves(const Position& x);
  /// Representative keep-indices of optimal_moves (k = n - 1 only).
  std::vector<int> optimal_keeps(const Position& x);

  /// Normal-play Sprague-Grundy value; unsupported_spec for misère.
  int sg_value(const Position& x);

  std::size_t cached_positions() const;

 private:
  struct Shard;
  template <typename Fold, typename Value>
  Value evaluate(const Position& x, std::unique_ptr<Shard[]>& memo);

  GameSpec spec_;
  std::unique_ptr<Shard[]> remoteness_memo_;
  std::unique_ptr<Shard[]> sg_memo_;
};

// One-shot conveniences; each builds a private Solver.
Remoteness remoteness(const Position& x, const GameSpec& spec);
Winner winner(const Position& x, const GameSpec& spec);
std::vector<Move> optimal_moves(const Position& x, const GameSpec& spec);
int sg_value(const Position& x, const GameSpec& spec);

}  // namespace slownim
