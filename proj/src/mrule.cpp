#include "slownim/mrule.hpp"

namespace slownim {

MRuleOutcome m_move(const Position& x) {
  const int n = static_cast<int>(x.size());
  if (n < 2) throw Error(ErrorKind::unsupported_spec, "the M-rule needs at least two piles");
  if (static_cast<int>(x.nonzero_count()) < n - 1) {
    throw Error(ErrorKind::no_moves, x.to_string() + " is terminal");
  }
  MRuleOutcome out;
  // Sorted input: the first even entry is the smallest even value.
  int smallest_even = -1;
  for (int i = 0; i < n && smallest_even < 0; ++i)
    if (x[i] % 2 == 0) smallest_even = i;
  if (smallest_even >= 0)
    while (smallest_even + 1 < n && x[smallest_even + 1] == x[smallest_even]) ++smallest_even;
  if (smallest_even >= 0) {
    out.kept_index = smallest_even;
    out.rule = MRulePart::e;
  } else {
    out.kept_index = n - 1;
    out.rule = MRulePart::o;
  }
  PositionBuilder b(x);
  for (int i = 0; i < n; ++i)
    if (i != out.kept_index) b.decrement(i);
  out.successor = std::move(b).assume_sorted();
  return out;
}

MSequence m_sequence(const Position& x) {
  if (x.size() < 2) throw Error(ErrorKind::unsupported_spec, "the M-rule needs at least two piles");
  MSequence seq;
  seq.positions.push_back(x);
  const std::size_t need = x.size() - 1;
  while (seq.positions.back().nonzero_count() >= need) {
    seq.positions.push_back(m_move(seq.positions.back()).successor);
  }
  seq.moves = static_cast<int>(seq.positions.size()) - 1;
  return seq;
}

}  // namespace slownim
