#include "slownim/table.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

namespace slownim {

SolveTable::SolveTable(GameSpec spec, int cap, std::vector<Remoteness> values)
    : spec_(spec), indexer_(spec.n, cap), values_(std::move(values)) {
  if (values_.size() != indexer_.size()) {
    throw Error(ErrorKind::corrupt_table, "table holds " + std::to_string(values_.size()) +
                                              " values, box needs " +
                                              std::to_string(indexer_.size()));
  }
}

std::vector<Move> SolveTable::optimal_moves(const Position& x) const {
  if (is_terminal(x, spec_)) throw Error(ErrorKind::no_moves, x.to_string() + " is terminal");
  const Remoteness target = static_cast<Remoteness>(at(x) - 1);
  std::vector<Move> out;
  for_each_successor(x, spec_.k, [&](MoveChoice c, const Position& y) {
    if (values_[indexer_.rank_unchecked(y)] == target) out.push_back({c, y});
  });
  return out;
}

std::vector<int> SolveTable::optimal_keeps(const Position& x) const {
  if (!spec_.is_keep_one()) throw Error(ErrorKind::unsupported_spec, "keep indices need k = n - 1");
  std::vector<int> keeps;
  for (const Move& m : optimal_moves(x)) keeps.push_back(representative_keep(x, m.choice));
  std::sort(keeps.begin(), keeps.end());
  return keeps;
}

SolveRecord SolveTable::record(Rank r) const {
  SolveRecord rec;
  rec.position = indexer_.unrank(r);
  rec.remoteness = values_[r];
  rec.winner = winner_from_remoteness(rec.remoteness);
  if (spec_.is_keep_one() && !is_terminal(rec.position, spec_)) {
    rec.optimal_keeps = optimal_keeps(rec.position);
  }
  return rec;
}

void check_box_budget(int n, int cap, Rank max_entries) {
  const Rank size = box_size(n, cap);
  if (size <= max_entries && size <= std::numeric_limits<std::uint32_t>::max()) return;
  int fits = cap;
  while (fits > 0 && box_size(n, fits) > max_entries) --fits;
  throw Error(ErrorKind::resource,
              "box n=" + std::to_string(n) + " cap=" + std::to_string(cap) + " has " +
                  std::to_string(size) + " positions (budget " + std::to_string(max_entries) +
                  "); largest cap that fits: " + std::to_string(fits));
}

namespace {

inline Remoteness evaluate_from_table(const Position& x, int k, Version version,
                                      const BoxIndexer& idx, const Remoteness* values) {
  RemotenessFold fold;
  for_each_successor(x, k, [&](MoveChoice, const Position& y) {
    fold.add(values[idx.rank_unchecked(y)]);
  });
  return fold.result(version);
}

}  // namespace

SolveTable build_table(const GameSpec& spec_in, int cap, const BuildOptions& options) {
  const GameSpec spec = GameSpec::make(spec_in.n, spec_in.k, spec_in.version);
  check_box_budget(spec.n, cap, options.max_entries);
  const BoxIndexer idx(spec.n, cap);
  const Rank size = idx.size();

  // Counting sort of ranks by pile sum.
  const int max_sum = spec.n * cap;
  std::vector<std::uint32_t> level_start(static_cast<std::size_t>(max_sum) + 2, 0);
  for (const Position& x : enumerate_box(spec.n, cap)) ++level_start[x.sum() + 1];
  for (int s = 0; s <= max_sum; ++s) level_start[s + 1] += level_start[s];
  std::vector<std::uint32_t> order(size);
  {
    std::vector<std::uint32_t> fill(level_start.begin(), level_start.end() - 1);
    std::uint32_t r = 0;
    for (const Position& x : enumerate_box(spec.n, cap)) order[fill[x.sum()]++] = r++;
  }

  std::vector<Remoteness> values(size, 0);
  Remoteness* out = values.data();
  const int threads = options.threads;
  for (int s = 0; s <= max_sum; ++s) {
    const std::int64_t lo = level_start[s];
    const std::int64_t hi = level_start[s + 1];
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : omp_get_max_threads()) if (hi - lo > 256)
    for (std::int64_t j = lo; j < hi; ++j) {
      const Rank r = order[static_cast<std::size_t>(j)];
      out[r] = evaluate_from_table(idx.unrank(r), spec.k, spec.version, idx, out);
    }
  }
  return SolveTable(spec, cap, std::move(values));
}

SolveTable build_table_serial(const GameSpec& spec_in, int cap, Rank max_entries) {
  const GameSpec spec = GameSpec::make(spec_in.n, spec_in.k, spec_in.version);
  check_box_budget(spec.n, cap, max_entries);
  const BoxIndexer idx(spec.n, cap);
  std::vector<Remoteness> values(idx.size(), 0);
  Rank r = 0;
  for (const Position& x : enumerate_box(spec.n, cap)) {
    values[r++] = evaluate_from_table(x, spec.k, spec.version, idx, values.data());
  }
  return SolveTable(spec, cap, std::move(values));
}

}  // namespace slownim
