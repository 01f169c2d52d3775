#include "slownim/exceptions.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include <omp.h>

#include "json.hpp"

namespace slownim {

// ---------------------------------------------------------------- Evaluator

Evaluator::Evaluator(Version version, int cap) : Evaluator(version, cap, Options{}) {}

Evaluator::Evaluator(Version version, int cap, Options options)
    : version_(version), cap_(cap), options_(std::move(options)) {
  if (cap < 0 || cap > kMaxPileValue) throw Error(ErrorKind::invalid_input, "bad cap");
}

std::string table_cache_name(const GameSpec& spec, int cap) {
  return "slownim-n" + std::to_string(spec.n) + "-k" + std::to_string(spec.k) + "-" +
         std::string(to_string(spec.version)) + "-cap" + std::to_string(cap) + ".tbl";
}

const SolveTable* Evaluator::table(int n) {
  if (n < 2 || n > static_cast<int>(kMaxPiles)) return nullptr;
  if (const SolveTable* t = ready_[n].load(std::memory_order_acquire)) return t;
  std::lock_guard lock(mutex_);
  if (auto it = tables_.find(n); it != tables_.end()) return it->second.get();
  if (over_budget_.count(n)) return nullptr;
  const GameSpec spec = GameSpec::keep_one(n, version_);
  if (box_size(n, cap_) > options_.build.max_entries) {
    over_budget_[n] = true;
    return nullptr;
  }
  std::unique_ptr<SolveTable> built;
  if (options_.cache_dir) {
    const auto path = *options_.cache_dir / table_cache_name(spec, cap_);
    if (std::filesystem::exists(path)) {
      try {
        auto loaded = std::make_unique<SolveTable>(load_table(path));
        if (loaded->spec() == spec && loaded->cap() == cap_) built = std::move(loaded);
      } catch (const Error&) {
        // Rebuilt and overwritten below.
      }
    }
    if (!built) {
      built = std::make_unique<SolveTable>(build_table(spec, cap_, options_.build));
      std::filesystem::create_directories(*options_.cache_dir);
      save_table(*built, path);
    }
  } else {
    built = std::make_unique<SolveTable>(build_table(spec, cap_, options_.build));
  }
  const SolveTable* t = (tables_[n] = std::move(built)).get();
  ready_[n].store(t, std::memory_order_release);
  return t;
}

Solver& Evaluator::solver(int n) {
  std::lock_guard lock(mutex_);
  auto& slot = solvers_[n];
  if (!slot) slot = std::make_unique<Solver>(GameSpec::keep_one(n, version_));
  return *slot;
}

Remoteness Evaluator::remoteness(const Position& x) {
  const int n = static_cast<int>(x.size());
  if (n < 2) throw Error(ErrorKind::unsupported_spec, "need at least two piles");
  if (x.back() <= cap_) {
    if (const SolveTable* t = table(n)) return t->at_rank(t->indexer().rank_unchecked(x));
  }
  return solver(n).remoteness(x);
}

std::vector<int> Evaluator::optimal_keeps(const Position& x) {
  const int n = static_cast<int>(x.size());
  if (x.back() <= cap_) {
    if (const SolveTable* t = table(n)) return t->optimal_keeps(x);
  }
  return solver(n).optimal_keeps(x);
}

// --------------------------------------------------------------- detection

namespace {

void require_keep_one(const GameSpec& spec, const Position& x) {
  if (!spec.is_keep_one()) {
    throw Error(ErrorKind::unsupported_spec, "exceptions are defined for k = n - 1 only");
  }
  if (static_cast<int>(x.size()) != spec.n) {
    throw Error(ErrorKind::invalid_input, "position length does not match " + spec.to_string());
  }
}

bool terminal_keep_one(const Position& x) {
  return x.nonzero_count() + 1 < x.size();
}

Evaluator adhoc_evaluator(const GameSpec& spec, const Position& x) {
  return Evaluator(spec.version, x.back());
}

}  // namespace

bool is_exception(const Position& x, Evaluator& eval) {
  if (x.size() < 2) throw Error(ErrorKind::unsupported_spec, "need at least two piles");
  if (terminal_keep_one(x)) throw Error(ErrorKind::no_moves, x.to_string() + " is terminal");
  const MRuleOutcome m = m_move(x);
  return eval.remoteness(x) - eval.remoteness(m.successor) != 1;
}

bool is_exception(const Position& x, const GameSpec& spec) {
  require_keep_one(spec, x);
  Evaluator eval = adhoc_evaluator(spec, x);
  return is_exception(x, eval);
}

Position minimal_core(const Position& x, Evaluator& eval) {
  if (!is_exception(x, eval)) {
    throw Error(ErrorKind::not_an_exception, x.to_string() + " is not an exception");
  }
  for (std::size_t j = 3; j < x.size(); ++j) {
    const Position p = x.prefix(j);
    if (!terminal_keep_one(p) && is_exception(p, eval)) return p;
  }
  return x;
}

Position minimal_core(const Position& x, const GameSpec& spec) {
  require_keep_one(spec, x);
  Evaluator eval = adhoc_evaluator(spec, x);
  return minimal_core(x, eval);
}

namespace {

bool is_minimal_exception_unchecked(const Position& x, Evaluator& eval) {
  for (std::size_t j = 3; j < x.size(); ++j) {
    const Position p = x.prefix(j);
    if (!terminal_keep_one(p) && is_exception(p, eval)) return false;
  }
  const std::size_t n = x.size();
  if (n >= 2 && x.back() >= 1 && x.back() - 1 >= x[n - 2]) {
    const Position lowered = x.prefix(n - 1).extended(static_cast<Pile>(x.back() - 1));
    if (!terminal_keep_one(lowered) && is_exception(lowered, eval)) return false;
  }
  return true;
}

ExceptionRecord diagnose_known(const Position& x, Remoteness r, const MRuleOutcome& m,
                               Remoteness r_prime, Evaluator& eval) {
  ExceptionRecord rec;
  rec.position = x;
  rec.version = eval.version();
  rec.r = r;
  rec.r_prime = r_prime;
  rec.delta = static_cast<int>(r) - static_cast<int>(r_prime);
  rec.optimal_keeps = eval.optimal_keeps(x);
  rec.m_keep = m.kept_index;
  rec.minimal = is_minimal_exception_unchecked(x, eval);
  return rec;
}

}  // namespace

ExceptionRecord diagnose(const Position& x, Evaluator& eval) {
  if (x.size() < 2) throw Error(ErrorKind::unsupported_spec, "need at least two piles");
  if (terminal_keep_one(x)) throw Error(ErrorKind::no_moves, x.to_string() + " is terminal");
  const MRuleOutcome m = m_move(x);
  const Remoteness r = eval.remoteness(x);
  const Remoteness r_prime = eval.remoteness(m.successor);
  if (r - r_prime == 1) {
    throw Error(ErrorKind::not_an_exception, x.to_string() + " is not an exception");
  }
  return diagnose_known(x, r, m, r_prime, eval);
}

bool is_minimal_exception(const Position& x, Evaluator& eval) {
  return is_exception(x, eval) && is_minimal_exception_unchecked(x, eval);
}

ExceptionRecord diagnose(const Position& x, const GameSpec& spec) {
  require_keep_one(spec, x);
  Evaluator eval = adhoc_evaluator(spec, x);
  return diagnose(x, eval);
}

// -------------------------------------------------------------------- scan

namespace {

constexpr Rank kChunk = 4096;

void scan_range(const GameSpec& spec, const SolveTable& table, Rank lo, Rank hi, Evaluator& eval,
                std::vector<ExceptionRecord>& out) {
  const BoxIndexer& idx = table.indexer();
  for (Rank r = lo; r < hi; ++r) {
    const Position x = idx.unrank(r);
    if (terminal_keep_one(x)) continue;
    const MRuleOutcome m = m_move(x);
    const Remoteness rx = table.at_rank(r);
    const Remoteness rm = table.at_rank(idx.rank_unchecked(m.successor));
    if (rx - rm == 1) continue;
    out.push_back(diagnose_known(x, rx, m, rm, eval));
  }
  (void)spec;
}

const SolveTable& prepare_scan(const GameSpec& spec, int cap, Evaluator& eval,
                               Rank max_entries) {
  if (!spec.is_keep_one()) {
    throw Error(ErrorKind::unsupported_spec, "scan needs k = n - 1, got " + spec.to_string());
  }
  if (spec.n < 2) throw Error(ErrorKind::unsupported_spec, "scan needs at least two piles");
  if (eval.version() != spec.version || eval.cap() < cap) {
    throw Error(ErrorKind::invalid_input, "evaluator does not cover the scan box");
  }
  check_box_budget(spec.n, cap, max_entries);
  check_box_budget(spec.n, eval.cap(), max_entries);
  const SolveTable* table = eval.table(spec.n);
  if (!table) check_box_budget(spec.n, eval.cap(), 0);  // throws with details
  // Prefix games are consulted for minimality; build them up front.
  for (int j = 3; j < spec.n; ++j) eval.table(j);
  return *table;
}

}  // namespace

std::vector<ExceptionRecord> scan_box(const GameSpec& spec, int cap, Evaluator& eval,
                                      const ScanOptions& options) {
  const SolveTable& table = prepare_scan(spec, cap, eval, options.max_entries);
  const Rank size = box_size(spec.n, cap);
  const std::int64_t chunks = static_cast<std::int64_t>((size + kChunk - 1) / kChunk);
  std::vector<std::vector<ExceptionRecord>> parts(static_cast<std::size_t>(chunks));
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const Rank lo = static_cast<Rank>(c) * kChunk;
    scan_range(spec, table, lo, std::min(size, lo + kChunk), eval, parts[static_cast<std::size_t>(c)]);
  }
  std::vector<ExceptionRecord> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

std::vector<ExceptionRecord> scan_box(const GameSpec& spec, int cap, const ScanOptions& options) {
  Evaluator::Options eo;
  eo.build.threads = options.threads;
  eo.build.max_entries = options.max_entries;
  Evaluator eval(spec.version, cap, eo);
  return scan_box(spec, cap, eval, options);
}

std::vector<ExceptionRecord> scan_box_serial(const GameSpec& spec, int cap, Evaluator& eval) {
  const SolveTable& table = prepare_scan(spec, cap, eval, kDefaultMaxEntries);
  std::vector<ExceptionRecord> out;
  scan_range(spec, table, 0, box_size(spec.n, cap), eval, out);
  return out;
}

// -------------------------------------------------------------- properties

std::string_view describe(Property p) noexcept {
  switch (p) {
    case Property::unit_gap: return "x_n - x_{n-1} = 1";
    case Property::remoteness_formula: return "R = round_up_even(x_{n-1}) + 1";
    case Property::odd_remoteness: return "R odd";
    case Property::delta_parity: return "delta in {0,2}, delta = 0 iff x_{n-1} even";
    case Property::keep_rules: return "optimal keeps x_n if x_{n-1} even else x_{n-1}; M keeps the other";
    case Property::disjoint_moves: return "optimal moves and M-move disjoint";
    case Property::defining: return "R - R' != 1";
  }
  return "?";
}

bool PropertyReport::all_passed() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.failed == 0; });
}

PropertyReport check_properties(const std::vector<ExceptionRecord>& records) {
  PropertyReport report;
  for (int i = 0; i < kPropertyCount; ++i) report.results[i].property = static_cast<Property>(i);
  auto tally = [&](Property p, bool ok, const Position& x) {
    PropertyResult& res = report.results[static_cast<int>(p)];
    if (ok) {
      ++res.passed;
    } else {
      ++res.failed;
      res.violations.push_back(x);
    }
  };
  for (const ExceptionRecord& rec : records) {
    const Position& x = rec.position;
    const std::size_t n = x.size();
    if (n < 2) continue;
    const int last = x[n - 1];
    const int second = x[n - 2];
    const bool second_even = second % 2 == 0;

    std::set<int> optimal_values;
    for (int k : rec.optimal_keeps) optimal_values.insert(x[k]);
    const int m_value = rec.m_keep >= 0 && rec.m_keep < static_cast<int>(n) ? x[rec.m_keep] : -1;
    const int want_optimal = second_even ? last : second;
    const int want_m = second_even ? second : last;

    tally(Property::unit_gap, last - second == 1, x);
    tally(Property::remoteness_formula, rec.r == round_up_even(second) + 1, x);
    tally(Property::odd_remoteness, rec.r % 2 == 1, x);
    tally(Property::delta_parity, (rec.delta == 0 && second_even) || (rec.delta == 2 && !second_even), x);
    tally(Property::keep_rules,
          optimal_values == std::set<int>{want_optimal} && m_value == want_m, x);
    tally(Property::disjoint_moves, !optimal_values.count(m_value), x);
    tally(Property::defining, rec.delta != 1, x);
  }
  return report;
}

// --------------------------------------------------------------- extension

ExtensionReport check_monotone_extension(const Position& core, Evaluator& eval, int extensions,
                                         int cap) {
  ExtensionReport report;
  std::set<int> core_values;
  for (int k : eval.optimal_keeps(core)) core_values.insert(core[k]);
  const int last = core.back();

  std::vector<int> tail;
  // Depth-first over non-decreasing tails of length 1..extensions.
  auto visit = [&](auto&& self, const Position& y, int depth) -> void {
    if (depth > 0) {
      ++report.checked;
      bool ok = !terminal_keep_one(y) && is_exception(y, eval);
      if (ok) {
        std::set<int> kept;
        for (int k : eval.optimal_keeps(y))
          if (y[k] <= last) kept.insert(y[k]);
        ok = kept == core_values;
      }
      if (!ok) report.failures.push_back(y);
    }
    if (depth == extensions || y.size() >= kMaxPiles) return;
    for (int v = y.back(); v <= cap; ++v) self(self, y.extended(static_cast<Pile>(v)), depth + 1);
  };
  visit(visit, core, 0);
  return report;
}

bool verify_monotone_extension(const Position& core, const GameSpec& spec, int extensions, int cap) {
  require_keep_one(spec, core);
  Evaluator eval(spec.version, std::max<int>(cap, core.back()));
  return check_monotone_extension(core, eval, extensions, cap).ok();
}

// -------------------------------------------------------------------- json

std::string to_jsonl(const ExceptionRecord& rec) {
  nlohmann::ordered_json j;
  j["piles"] = rec.position.to_vector();
  j["version"] = to_string(rec.version);
  j["R"] = rec.r;
  j["Rprime"] = rec.r_prime;
  j["delta"] = rec.delta;
  j["optimalKeeps"] = rec.optimal_keeps;
  j["mKeep"] = rec.m_keep;
  j["minimal"] = rec.minimal;
  j["families"] = rec.families;
  return j.dump();
}

}  // namespace slownim
