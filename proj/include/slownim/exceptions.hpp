#pragma once

#include <array>
#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "slownim/mrule.hpp"
#include "slownim/solver.hpp"
#include "slownim/table.hpp"

namespace slownim {

/// Remoteness lookups for one play version and k = n - 1, across pile
/// counts. Positions inside the cap are answered from dense tables built on
/// first use (or loaded from `cache_dir`); anything else falls back to a
/// memoized Solver. Safe to share between threads.
class Evaluator {
 public:
  struct Options {
    BuildOptions build;
    std::optional<std::filesystem::path> cache_dir;
  };

  Evaluator(Version version, int cap);
  Evaluator(Version version, int cap, Options options);

  Version version() const noexcept { return version_; }
  int cap() const noexcept { return cap_; }

  /// Table for n piles at this cap, built if needed; nullptr when the box
  /// is over budget.
  const SolveTable* table(int n);
  Remoteness remoteness(const Position& x);
  std::vector<int> optimal_keeps(const Position& x);

 private:
  Solver& solver(int n);

  Version version_;
  int cap_;
  Options options_;
  std::mutex mutex_;
  std::array<std::atomic<const SolveTable*>, kMaxPiles + 1> ready_{};
  std::map<int, std::unique_ptr<SolveTable>> tables_;
  std::map<int, bool> over_budget_;
  std::map<int, std::unique_ptr<Solver>> solvers_;
};

/// Cache file name for a table: slownim-n<n>-k<k>-<version>-cap<cap>.tbl
std::string table_cache_name(const GameSpec& spec, int cap);

struct ExceptionRecord {
  Position position;
  Version version = Version::misere;
  Remoteness r = 0;
  Remoteness r_prime = 0;
  int delta = 0;
  std::vector<int> optimal_keeps;
  int m_keep = -1;
  bool minimal = false;  // see is_minimal_exception
  std::vector<std::string> families;
};

/// R(x) - R(m_move(x)) != 1. Requires k = n - 1 and a non-terminal x.
bool is_exception(const Position& x, Evaluator& eval);
bool is_exception(const Position& x, const GameSpec& spec);

/// Throws not_an_exception if x is not one.
ExceptionRecord diagnose(const Position& x, Evaluator& eval);
ExceptionRecord diagnose(const Position& x, const GameSpec& spec);

/// An exception with no exceptional proper prefix whose last pile cannot be
/// lowered (keeping order) without losing the exception. This is the form in
/// which exceptions are listed, with the last pile open upward.
bool is_minimal_exception(const Position& x, Evaluator& eval);

/// Shortest exceptional prefix (x_1..x_j), j >= 3, judged in the j-pile game.
Position minimal_core(const Position& x, Evaluator& eval);
Position minimal_core(const Position& x, const GameSpec& spec);

struct ScanOptions {
  int threads = 0;
  Rank max_entries = kDefaultMaxEntries;
};

/// Every exception of the box, diagnosed, in rank order. Work is split into
/// rank ranges; output is identical for any thread count.
std::vector<ExceptionRecord> scan_box(const GameSpec& spec, int cap, Evaluator& eval,
                                      const ScanOptions& options = {});
std::vector<ExceptionRecord> scan_box(const GameSpec& spec, int cap,
                                      const ScanOptions& options = {});
/// Single-threaded reference for scan_box.
std::vector<ExceptionRecord> scan_box_serial(const GameSpec& spec, int cap, Evaluator& eval);

enum class Property : int {
  unit_gap = 0,        // x_n - x_{n-1} = 1
  remoteness_formula,  // R = round_up_even(x_{n-1}) + 1
  odd_remoteness,      // R odd
  delta_parity,        // delta in {0, 2}, 0 iff x_{n-1} even
  keep_rules,          // optimal keeps x_n iff x_{n-1} even; M keeps the other
  disjoint_moves,      // optimal and M keeps disjoint
  defining,            // delta != 1
};
inline constexpr int kPropertyCount = 7;
std::string_view describe(Property p) noexcept;

struct PropertyResult {
  Property property;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<Position> violations;
};

struct PropertyReport {
  std::array<PropertyResult, kPropertyCount> results;
  bool all_passed() const noexcept;
};

PropertyReport check_properties(const std::vector<ExceptionRecord>& records);

struct ExtensionReport {
  std::size_t checked = 0;
  std::vector<Position> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Appends 1..extensions sorted piles (each >= the last entry, <= cap) to a
/// minimal exception and checks each result is an exception whose optimal
/// keeps, restricted to the core's piles, match the core's.
ExtensionReport check_monotone_extension(const Position& core, Evaluator& eval, int extensions,
                                         int cap);
bool verify_monotone_extension(const Position& core, const GameSpec& spec, int extensions, int cap);

/// JSONL line (no trailing newline), keys in a fixed order.
std::string to_jsonl(const ExceptionRecord& rec);

}  // namespace slownim
