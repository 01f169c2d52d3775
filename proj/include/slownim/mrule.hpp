#pragma once

#include <vector>

#include "slownim/position.hpp"

namespace slownim {

/// l if even, l + 1 if odd.
constexpr int round_up_even(int l) noexcept { return l % 2 == 0 ? l : l + 1; }
/// m if odd, m + 1 if even.
constexpr int round_up_odd(int m) noexcept { return m % 2 == 1 ? m : m + 1; }

enum class MRulePart : char { o = 'o', e = 'e' };

struct MRuleOutcome {
  int kept_index = -1;
  Position successor;
  MRulePart rule = MRulePart::e;
};

/// The strict M-move for k = n - 1.
///
/// With an even pile present (zero counts as even) keep the smallest even
/// value; otherwise keep the largest value. Ties keep the largest index, so
/// the successor stays sorted without reordering. Throws no_moves on
/// terminal input and unsupported_spec for n < 2.
MRuleOutcome m_move(const Position& x);

struct MSequence {
  std::vector<Position> positions;  // x ... terminal
  int moves = 0;                    // positions.size() - 1
};

MSequence m_sequence(const Position& x);

}  // namespace slownim
