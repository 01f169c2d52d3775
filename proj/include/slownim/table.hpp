#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "slownim/box.hpp"
#include "slownim/solver.hpp"

namespace slownim {

/// Default cap on table entries (2 bytes each plus a 4-byte level index
/// during construction).
inline constexpr Rank kDefaultMaxEntries = Rank{1} << 28;

struct SolveRecord {
  Position position;
  Remoteness remoteness = 0;
  Winner winner = Winner::P;
  std::vector<int> optimal_keeps;  // k = n - 1 only
  std::optional<int> sg;
};

/// Dense remoteness values for every position of a box, indexed by rank.
class SolveTable {
 public:
  SolveTable(GameSpec spec, int cap, std::vector<Remoteness> values);

  const GameSpec& spec() const noexcept { return spec_; }
  int cap() const noexcept { return indexer_.cap(); }
  Rank size() const noexcept { return values_.size(); }
  const BoxIndexer& indexer() const noexcept { return indexer_; }
  std::span<const Remoteness> values() const noexcept { return values_; }

  bool contains(const Position& x) const noexcept {
    return static_cast<int>(x.size()) == spec_.n && x.back() <= cap();
  }
  /// Throws out_of_box outside the box.
  Remoteness at(const Position& x) const { return values_[indexer_.rank(x)]; }
  Remoteness at_rank(Rank r) const noexcept { return values_[r]; }

  std::vector<Move> optimal_moves(const Position& x) const;
  std::vector<int> optimal_keeps(const Position& x) const;
  SolveRecord record(Rank r) const;

  friend bool operator==(const SolveTable& a, const SolveTable& b) {
    return a.spec_ == b.spec_ && a.cap() == b.cap() && a.values_ == b.values_;
  }

 private:
  GameSpec spec_;
  BoxIndexer indexer_;
  std::vector<Remoteness> values_;
};

struct BuildOptions {
  int threads = 0;  // 0: OpenMP default
  Rank max_entries = kDefaultMaxEntries;
};

/// Throws resource (naming the size and the largest cap that fits) when the
/// box for (n, cap) exceeds max_entries.
void check_box_budget(int n, int cap, Rank max_entries);

/// Retrograde construction by pile-sum level: a move lowers the sum by
/// exactly k, so each level reads only finished levels and its entries are
/// evaluated in parallel.
SolveTable build_table(const GameSpec& spec, int cap, const BuildOptions& options = {});

/// Single-threaded reference: one pass in rank order (successors always rank
/// lower). Kept for cross-checking and benchmarks.
SolveTable build_table_serial(const GameSpec& spec, int cap, Rank max_entries = kDefaultMaxEntries);

// Binary format: "SLOWNIM1", u32 n, k, version, cap, u64 count, count x u16
// remoteness by rank, u64 FNV-1a checksum of everything before it.
// All little-endian.
void save_table(const SolveTable& table, std::ostream& out);
void save_table(const SolveTable& table, const std::filesystem::path& path);
SolveTable load_table(std::istream& in);
SolveTable load_table(const std::filesystem::path& path);

struct TableHeader {
  GameSpec spec;
  int cap = 0;
  Rank count = 0;
};
TableHeader read_table_header(const std::filesystem::path& path);

/// One JSON object per position: {"piles":[...],"remoteness":R,"winner":"N"}.
void export_jsonl(const SolveTable& table, std::ostream& out);
/// Header x1..xn,remoteness,winner.
void export_csv(const SolveTable& table, std::ostream& out);

}  // namespace slownim
