#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "slownim/exceptions.hpp"

namespace slownim {

enum class FamilyKind { parametric, table };
enum class Parity { any, odd, even };

/// a * x1 + b * i + c
struct LinearExpr {
  int a = 0;
  int b = 0;
  int c = 0;
  int eval(int x1, int i) const noexcept { return a * x1 + b * i + c; }
};

/// Entry index (1-based) either absolute or counted back from n.
struct IndexRef {
  int value = 0;
  bool from_n = false;  // index = n + value
  int resolve(int n) const noexcept { return from_n ? n + value : value; }
};

struct Block {
  IndexRef first;
  IndexRef last;
  LinearExpr value;
};

struct SubPattern {
  std::string name;
  std::vector<Block> blocks;
  std::string text;
};

/// A tabulated core, or a worked example of a parametric family.
struct FixtureRow {
  std::vector<int> entries;
  bool open = false;  // last entry means "this or larger"
  std::optional<int> printed_r;
  bool cleaned = false;
  bool corrected = false;   // raw cell is a misprint; entries hold the fix
  std::string raw;
  std::vector<int> raw_entries;  // numbers of a tuple cell as printed

  int x1() const noexcept { return entries.front(); }
  std::string reading() const;
};

struct Applicability {
  Parity parity = Parity::any;
  int x1_min = 0;
  std::optional<int> x1_max;
  int modulus = 1;
  int residue = 0;
  // n = (n_a * x1 + n_c) / n_d
  int n_a = 0;
  int n_c = 0;
  int n_d = 1;
  /// Region for iff comparisons: false compares at the core length only,
  /// true also covers extensions of the core.
  bool extended = false;

  bool admits(int x1) const noexcept;
  std::optional<int> core_length(int x1) const noexcept;
};

struct Family {
  std::string id;
  FamilyKind kind = FamilyKind::parametric;
  std::string title;
  std::string iff_group;  // empty when no exactness claim
  Applicability applicability;
  bool has_param = false;
  std::vector<SubPattern> patterns;  // parametric only
  std::vector<FixtureRow> rows;      // table rows, or parametric examples
  std::vector<std::string> notes;

  bool iff_claimed() const noexcept { return !iff_group.empty(); }
  /// Smallest prefix length j such that x_1..x_j is a core of this family.
  std::optional<int> matched_core(const Position& x) const;
  bool matches(const Position& x) const { return matched_core(x).has_value(); }
};

/// Text of the bundled fixtures file.
std::string_view family_fixture_text();
/// Throws invalid_input with a line number on malformed text.
std::vector<Family> parse_families(std::string_view text);

/// The bundled catalog, parsed once.
const std::vector<Family>& catalog();
/// Throws invalid_input for an unknown id.
const Family& find_family(std::string_view id);

struct MemberBounds {
  int max_entry = 0;
  int max_extensions = 0;
  int length = 0;  // 0: any length
};

/// Members within bounds, ordered by length then lexicographically. Open
/// last entries run up to max_entry; extensions append sorted piles.
std::vector<Position> generate_members(const Family& f, const MemberBounds& bounds);

/// Ids of every family that x belongs to (some prefix of x is a core).
std::vector<std::string> membership(const Position& x);

/// round_up_even(x_{j-1}) + 1 on the shortest matched core x_1..x_j.
/// Throws not_in_catalog for non-members.
int predicted_remoteness(const Position& x);

struct KeepPrediction {
  int optimal = -1;
  int m = -1;
};
/// 0-based indices into the core: x_j when x_{j-1} is even, else x_{j-1};
/// the M-move keeps the other one.
KeepPrediction predicted_keep(const Position& x);

struct VerifyBounds {
  int max_entry = 0;
  int max_extensions = 2;
  int n_min = 0;  // 0: smallest core length
  int n_max = 0;  // 0: largest core length plus max_extensions
  Rank max_entries = Rank{1} << 25;  // per level; larger levels are skipped
  int threads = 0;
};

struct FamilyReport {
  std::string id;
  Version version = Version::misere;
  int max_entry = 0;
  int max_extensions = 0;
  std::vector<int> levels;          // pile counts compared
  std::vector<int> skipped_levels;  // over the entry budget
  std::size_t generated = 0;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  bool misses_checked = false;
  std::size_t misses = 0;
  std::size_t remoteness_checked = 0;
  std::size_t remoteness_mismatches = 0;
  std::vector<Position> false_positive_samples;
  std::vector<Position> miss_samples;
  std::vector<Position> mismatch_samples;
  std::vector<std::string> failing_rows;  // raw text of rows with a false positive

  bool clean() const noexcept {
    return false_positives == 0 && remoteness_mismatches == 0 && misses == 0;
  }
};

FamilyReport verify_family(const Family& f, Evaluator& eval, const VerifyBounds& bounds);
FamilyReport verify_family(const Family& f, Version version, const VerifyBounds& bounds);
/// One pile count only: spec.n.
FamilyReport verify_family(const Family& f, const GameSpec& spec, const VerifyBounds& bounds);

struct CoverageReport {
  GameSpec spec;
  int cap = 0;
  std::size_t exceptions = 0;
  std::size_t minimal = 0;
  std::vector<std::pair<std::string, std::size_t>> hits;  // per family, catalog order
  std::vector<Position> uncovered;
  std::vector<Position> uncovered_minimal;
  std::vector<std::string> never_instantiated;
  std::vector<FamilyReport> family_reports;  // every family at spec.n, misere only

  /// Zero false positives and remoteness mismatches in every iff family.
  bool iff_clean() const noexcept;
};

CoverageReport coverage_report(const GameSpec& spec, int cap, Evaluator& eval,
                               const ScanOptions& options = {});
CoverageReport coverage_report(const GameSpec& spec, int cap, const ScanOptions& options = {});

/// Fills rec.families from membership.
void attach_families(ExceptionRecord& rec);

nlohmann::ordered_json to_json(const Family& f);
nlohmann::ordered_json to_json(const FamilyReport& r);
nlohmann::ordered_json to_json(const CoverageReport& r);

}  // namespace slownim
