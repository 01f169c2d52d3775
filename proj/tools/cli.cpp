#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "slownim/exceptions.hpp"
#include "slownim/families.hpp"
#include "slownim/mrule.hpp"
#include "slownim/solver.hpp"
#include "slownim/table.hpp"

namespace slownim::cli {

namespace {

namespace fs = std::filesystem;

struct Config {
  std::string piles;
  int n = 0;
  int k = 0;  // 0: n - 1
  std::string version = "misere";
  int max = 0;
  std::string out;
  std::string format = "jsonl";
  int threads = 0;
  std::string id;
  int n_min = 0;
  int n_max = 0;
  int extensions = 2;
  std::uint64_t max_entries = kDefaultMaxEntries;
  std::string first = "human";
  std::string table_in;
  bool families = false;
  bool json = false;
  std::string dir;
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<fs::path> cache_dir() {
  if (const char* env = std::getenv("SLOWNIM_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

Version version_of(const Config& c) {
  try {
    return parse_version(c.version);
  } catch (const Error&) {
    throw Usage("--version must be normal or misere");
  }
}

GameSpec spec_of(const Config& c, bool keep_one_only) {
  if (c.n < 1) throw Usage("--n is required");
  int k = c.k ? c.k : c.n - 1;
  if (keep_one_only && k != c.n - 1) throw Usage("this command needs k = n - 1");
  try {
    return GameSpec::make(c.n, k, version_of(c));
  } catch (const Error& e) {
    throw Usage(e.what());
  }
}

int require_cap(const Config& c) {
  if (c.max < 0) throw Usage("--max must be non-negative");
  if (c.max == 0) throw Usage("--max is required");
  return c.max;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i];
  }
  return s;
}

// Output goes to --out when given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Usage("cannot open " + path + " for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

SolveTable obtain_table(const GameSpec& spec, int cap, const Config& c, std::ostream& err) {
  BuildOptions opts{c.threads, c.max_entries};
  auto dir = cache_dir();
  if (dir) {
    fs::path path = *dir / table_cache_name(spec, cap);
    if (fs::exists(path)) {
      try {
        SolveTable t = load_table(path);
        if (t.spec() == spec && t.cap() == cap) return t;
      } catch (const Error& e) {
        err << "ignoring cached table " << path.string() << ": " << e.what() << "\n";
      }
    }
    SolveTable t = build_table(spec, cap, opts);
    fs::create_directories(*dir);
    save_table(t, path);
    return t;
  }
  return build_table(spec, cap, opts);
}

Evaluator::Options evaluator_options(const Config& c) {
  Evaluator::Options o;
  o.build.threads = c.threads;
  o.build.max_entries = c.max_entries;
  o.cache_dir = cache_dir();
  return o;
}

// ---------------------------------------------------------------------------

void describe_version(const Position& x, const GameSpec& spec, std::ostream& out) {
  Solver solver(spec);
  const Remoteness r = solver.remoteness(x);
  out << "[" << to_string(spec.version) << "]\n";
  out << "  remoteness: " << r << "\n";
  out << "  winner: " << to_char(winner_from_remoteness(r)) << "\n";
  if (is_terminal(x, spec)) {
    out << "  terminal: no moves\n";
    return;
  }
  if (spec.is_keep_one()) {
    out << "  optimal keeps: " << join(solver.optimal_keeps(x)) << "\n";
  } else {
    std::vector<std::string> moves;
    for (const auto& m : solver.optimal_moves(x))
      moves.push_back("reduce " + join(m.choice.reduced_indices()) + " -> " + m.next.to_string());
    out << "  optimal moves: ";
    for (std::size_t i = 0; i < moves.size(); ++i) out << (i ? "; " : "") << moves[i];
    out << "\n";
  }
  if (spec.version == Version::normal) out << "  sg: " << solver.sg_value(x) << "\n";
  if (!spec.is_keep_one() || spec.n < 2) return;
  const MRuleOutcome m = m_move(x);
  const Remoteness rp = solver.remoteness(m.successor);
  out << "  m-move: keep " << m.kept_index << " (rule " << static_cast<char>(m.rule) << ") -> "
      << m.successor.to_string() << "\n";
  out << "  m-successor remoteness: " << rp << "\n";
  const int delta = int(r) - int(rp);
  out << "  exception: " << (delta != 1 ? "true" : "false") << " (delta " << delta << ")\n";
  if (delta != 1 && spec.version == Version::misere) {
    auto ids = membership(x);
    out << "  families: " << (ids.empty() ? "none" : join(ids)) << "\n";
  }
}

int cmd_solve(const Config& c, std::ostream& out) {
  if (c.piles.empty()) throw Usage("--piles is required");
  Position x;
  try {
    x = Position::parse(c.piles);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
  const int n = static_cast<int>(x.size());
  if (c.n && c.n != n) throw Usage("--n does not match the number of piles");
  Config cc = c;
  cc.n = n;
  std::vector<Version> versions;
  if (c.version == "both") {
    versions = {Version::normal, Version::misere};
  } else {
    versions = {version_of(c)};
  }
  out << "position: " << x.to_string() << "\n";
  for (Version v : versions) {
    cc.version = std::string(to_string(v));
    describe_version(x, spec_of(cc, false), out);
  }
  return kOk;
}

int cmd_scan(const Config& c, std::ostream& out, std::ostream& err) {
  const GameSpec spec = spec_of(c, true);
  const int cap = require_cap(c);
  Evaluator eval(spec.version, cap, evaluator_options(c));
  auto records = scan_box(spec, cap, eval, ScanOptions{c.threads, c.max_entries});
  std::size_t minimal = 0, covered = 0, covered_minimal = 0;
  {
    Sink sink(c.out, out);
    for (auto& rec : records) {
      attach_families(rec);
      minimal += rec.minimal;
      if (!rec.families.empty()) {
        ++covered;
        covered_minimal += rec.minimal;
      }
      sink.stream() << to_jsonl(rec) << "\n";
    }
  }
  std::ostream& summary = c.out.empty() ? err : out;
  summary << "scan " << spec.to_string() << " cap " << cap << ": " << records.size() << " exceptions, "
          << minimal << " minimal; covered by a family: " << covered << " (" << covered_minimal
          << " minimal), uncovered: " << records.size() - covered << "\n";
  return kOk;
}

int cmd_table(const Config& c, std::ostream& out) {
  const GameSpec spec = spec_of(c, false);
  const int cap = require_cap(c);
  fs::path path;
  if (!c.out.empty()) {
    path = c.out;
  } else if (auto dir = cache_dir()) {
    fs::create_directories(*dir);
    path = *dir / table_cache_name(spec, cap);
  } else {
    throw Usage("give --out or set SLOWNIM_CACHE_DIR");
  }
  SolveTable t = build_table(spec, cap, BuildOptions{c.threads, c.max_entries});
  save_table(t, path);
  std::size_t n_positions = 0;
  Remoteness max_r = 0;
  for (Remoteness r : t.values()) {
    n_positions += r % 2;
    max_r = std::max(max_r, r);
  }
  out << "table " << spec.to_string() << " cap " << cap << ": " << t.size() << " positions, " << n_positions
      << " N, " << t.size() - n_positions << " P, max remoteness " << max_r << " -> " << path.string() << "\n";
  return kOk;
}

int cmd_export(const Config& c, std::ostream& out, std::ostream& err) {
  if (c.families) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : catalog()) arr.push_back(to_json(f));
    Sink sink(c.out, out);
    sink.stream() << arr.dump(2) << "\n";
    return kOk;
  }
  if (c.format != "jsonl" && c.format != "csv") throw Usage("--format must be jsonl or csv");
  std::optional<SolveTable> t;
  if (!c.table_in.empty()) {
    t.emplace(load_table(fs::path(c.table_in)));
  } else {
    t.emplace(obtain_table(spec_of(c, false), require_cap(c), c, err));
  }
  Sink sink(c.out, out);
  if (c.format == "csv") {
    export_csv(*t, sink.stream());
  } else {
    export_jsonl(*t, sink.stream());
  }
  return kOk;
}

void print_report(const Family& f, const FamilyReport& r, std::ostream& out) {
  out << f.id << (f.iff_claimed() ? " [iff " + f.iff_group + "]" : "") << ": levels n=" << join(r.levels);
  if (!r.skipped_levels.empty()) out << " (skipped n=" << join(r.skipped_levels) << ")";
  out << ", generated " << r.generated << ", true " << r.true_positives << ", false " << r.false_positives;
  if (r.misses_checked) out << ", misses " << r.misses;
  out << ", R mismatches " << r.remoteness_mismatches << "/" << r.remoteness_checked << "\n";
  for (const auto& x : r.false_positive_samples) out << "    not an exception: " << x.to_string() << "\n";
  for (const auto& x : r.miss_samples) out << "    missed: " << x.to_string() << "\n";
  for (const auto& x : r.mismatch_samples) out << "    remoteness differs: " << x.to_string() << "\n";
  for (const auto& raw : r.failing_rows) out << "    failing row: " << raw << "\n";
}

bool iff_failure(const Family& f, const FamilyReport& r) {
  return f.iff_claimed() && (r.false_positives || r.remoteness_mismatches);
}

int cmd_families_verify(const Config& c, std::ostream& out) {
  std::vector<const Family*> chosen;
  if (c.id.empty() || c.id == "all") {
    for (const auto& f : catalog()) chosen.push_back(&f);
  } else {
    try {
      chosen.push_back(&find_family(c.id));
    } catch (const Error& e) {
      throw Usage(e.what());
    }
  }
  VerifyBounds b;
  b.max_entry = c.max ? c.max : 20;
  b.max_extensions = c.extensions;
  b.n_min = c.n_min;
  b.n_max = c.n_max;
  b.max_entries = c.max_entries;
  b.threads = c.threads;
  if (c.n) b.n_min = b.n_max = c.n;
  Evaluator eval(version_of(c), b.max_entry, evaluator_options(c));
  auto arr = nlohmann::ordered_json::array();
  int code = kOk;
  for (const Family* f : chosen) {
    FamilyReport r = verify_family(*f, eval, b);
    if (!c.json) print_report(*f, r, out);
    arr.push_back(to_json(r));
    if (iff_failure(*f, r)) code = kVerificationFailed;
  }
  if (c.json) out << arr.dump(2) << "\n";
  if (!c.out.empty()) {
    Sink sink(c.out, out);
    sink.stream() << arr.dump(2) << "\n";
  }
  return code;
}

int cmd_families_coverage(const Config& c, std::ostream& out) {
  const GameSpec spec = spec_of(c, true);
  const int cap = require_cap(c);
  Evaluator eval(spec.version, cap, evaluator_options(c));
  CoverageReport rep = coverage_report(spec, cap, eval, ScanOptions{c.threads, c.max_entries});
  auto j = to_json(rep);
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "coverage " << spec.to_string() << " cap " << cap << ": " << rep.exceptions << " exceptions, "
        << rep.minimal << " minimal\n";
    out << "uncovered: " << rep.uncovered.size() << " (" << rep.uncovered_minimal.size() << " minimal)\n";
    for (const auto& x : rep.uncovered) out << "  " << x.to_string() << "\n";
    out << "never instantiated: " << (rep.never_instantiated.empty() ? "none" : join(rep.never_instantiated))
        << "\n";
    for (const auto& [id, h] : rep.hits)
      if (h) out << "  " << id << ": " << h << "\n";
    for (const auto& r : rep.family_reports) {
      const Family& f = find_family(r.id);
      if (iff_failure(f, r)) print_report(f, r, out);
    }
    out << "iff families clean: " << (rep.iff_clean() ? "yes" : "no") << "\n";
  }
  if (!c.out.empty()) {
    Sink sink(c.out, out);
    sink.stream() << j.dump(2) << "\n";
  }
  return rep.iff_clean() ? kOk : kVerificationFailed;
}

int cmd_families_list(std::ostream& out) {
  for (const auto& f : catalog()) {
    out << f.id << "  " << (f.kind == FamilyKind::table ? "table     " : "parametric") << "  "
        << (f.iff_claimed() ? "iff " + f.iff_group : "") << "  " << f.title << "\n";
  }
  return kOk;
}

int cmd_cache_info(const Config& c, std::ostream& out) {
  std::optional<fs::path> dir = c.dir.empty() ? cache_dir() : std::optional<fs::path>(c.dir);
  if (!dir) {
    out << "no cache directory (set SLOWNIM_CACHE_DIR or pass --dir)\n";
    return kOk;
  }
  out << "cache: " << dir->string() << "\n";
  if (!fs::is_directory(*dir)) {
    out << "  (does not exist)\n";
    return kOk;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(*dir))
    if (e.is_regular_file() && e.path().extension() == ".tbl") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    out << "  " << p.filename().string() << ": ";
    try {
      TableHeader h = read_table_header(p);
      out << h.spec.to_string() << " cap " << h.cap << ", " << h.count << " positions, "
          << fs::file_size(p) << " bytes\n";
    } catch (const Error& e) {
      out << "unreadable (" << e.what() << ")\n";
    }
  }
  if (files.empty()) out << "  (no tables)\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// play

Rank rank_for_order(const Position& x) {
  return BoxIndexer(static_cast<int>(x.size()), x.back()).rank(x);
}

Move engine_move(const Position& x, Solver& solver) {
  auto moves = successors(x, solver.spec());
  const bool winning = solver.remoteness(x) % 2 == 1;
  std::optional<Move> best;
  Remoteness best_r = 0;
  Rank best_rank = 0;
  for (auto& m : moves) {
    const Remoteness r = solver.remoteness(m.next);
    const Rank rk = rank_for_order(m.next);
    bool better;
    if (winning) {
      // Optimal moves only: the winner hurries.
      if (r % 2 == 1 || r + 1 != solver.remoteness(x)) continue;
      better = !best || rk < best_rank;
    } else {
      // Losing: stall as long as possible.
      better = !best || r > best_r || (r == best_r && rk < best_rank);
    }
    if (better) {
      best = m;
      best_r = r;
      best_rank = rk;
    }
  }
  return *best;
}

std::optional<std::vector<int>> parse_indices(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int i = std::stoi(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) return std::nullopt;
      v.push_back(i);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (v.empty()) return std::nullopt;
  return v;
}

// Applies a human command; returns an error message or the new position.
std::variant<std::string, Position> human_move(const Position& x, const GameSpec& spec, const std::string& line) {
  std::stringstream ss(line);
  std::string verb, rest;
  ss >> verb;
  std::getline(ss, rest);
  const int n = static_cast<int>(x.size());
  std::vector<int> reduced;
  if (verb == "keep") {
    if (!spec.is_keep_one()) return std::string("'keep' needs k = n - 1; use 'reduce i,j,...'");
    auto idx = parse_indices(rest);
    if (!idx || idx->size() != 1) return std::string("usage: keep <index>");
    int kept = idx->front();
    if (kept < 0 || kept >= n) return "index " + std::to_string(kept) + " is out of range";
    for (int i = 0; i < n; ++i)
      if (i != kept) reduced.push_back(i);
  } else if (verb == "reduce") {
    auto idx = parse_indices(rest);
    if (!idx) return std::string("usage: reduce <i,j,...>");
    reduced = *idx;
    std::sort(reduced.begin(), reduced.end());
    if (std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end())
      return std::string("indices must be distinct");
    for (int i : reduced)
      if (i < 0 || i >= n) return "index " + std::to_string(i) + " is out of range";
    if (static_cast<int>(reduced.size()) != spec.k)
      return "a move reduces exactly " + std::to_string(spec.k) + " piles";
  } else {
    return std::string("unknown command; try 'help'");
  }
  std::vector<int> v = x.to_vector();
  for (int i : reduced) {
    if (v[i] == 0) return "pile " + std::to_string(i) + " is empty";
    --v[i];
  }
  return Position::canonicalize(v);
}

int cmd_play(const Config& c, std::istream& in, std::ostream& out) {
  if (c.piles.empty()) throw Usage("--piles is required");
  if (c.first != "human" && c.first != "engine") throw Usage("--first must be human or engine");
  Position x;
  try {
    x = Position::parse(c.piles);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
  Config cc = c;
  if (cc.n && cc.n != static_cast<int>(x.size())) throw Usage("--n does not match the number of piles");
  cc.n = static_cast<int>(x.size());
  const GameSpec spec = spec_of(cc, false);
  Solver solver(spec);
  bool human = c.first == "human";
  out << "exact slow nim " << spec.to_string() << "; indices are 0-based into the sorted position\n";
  for (;;) {
    out << "position: " << x.to_string() << "\n";
    if (is_terminal(x, spec)) {
      const bool mover_wins = spec.version == Version::misere;
      const bool human_wins = human == mover_wins;
      out << (human ? "you" : "the engine") << " cannot move; " << (human_wins ? "you win" : "the engine wins")
          << "\n";
      return kOk;
    }
    if (!human) {
      Move m = engine_move(x, solver);
      int kept = spec.is_keep_one() ? m.choice.kept_index(spec.n) : -1;
      if (kept >= 0) {
        out << "engine: keep " << kept << "\n";
      } else {
        out << "engine: reduce " << join(m.choice.reduced_indices()) << "\n";
      }
      x = m.next;
      human = true;
      continue;
    }
    for (;;) {
      out << "> " << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        out << "\ninput ended\n";
        return kOk;
      }
      if (line == "quit" || line == "exit") {
        out << "bye\n";
        return kOk;
      }
      if (line == "help") {
        out << (spec.is_keep_one() ? "keep <i>: reduce every pile except pile i\n" : "")
            << "reduce <i,j,...>: reduce exactly " << spec.k << " piles by one\nquit: leave\n";
        continue;
      }
      auto r = human_move(x, spec, line);
      if (auto* msg = std::get_if<std::string>(&r)) {
        out << "illegal move: " << *msg << "\n";
        continue;
      }
      x = std::get<Position>(r);
      break;
    }
    human = false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact slow NIM: solver, exception scanner and family catalog", "slownim"};
  app.require_subcommand(1);
  Config c;

  auto add_spec = [&](CLI::App* s) {
    s->add_option("--n", c.n, "number of piles");
    s->add_option("--k", c.k, "piles reduced per move (default n - 1)");
    s->add_option("--version", c.version, "normal or misere")->capture_default_str();
  };
  auto add_work = [&](CLI::App* s) {
    s->add_option("--threads", c.threads, "worker threads (0: all)");
    s->add_option("--max-entries", c.max_entries, "largest table to build");
  };

  auto* solve = app.add_subcommand("solve", "solve one position");
  solve->add_option("--piles", c.piles, "comma-separated piles")->required();
  solve->add_option("--n", c.n, "number of piles (checked)");
  solve->add_option("--k", c.k, "piles reduced per move (default n - 1)");
  auto* solve_version = solve->add_option("--version", c.version, "normal, misere or both (default both)");

  auto* scan = app.add_subcommand("scan", "list every exception of a box as JSONL");
  add_spec(scan);
  add_work(scan);
  scan->add_option("--max", c.max, "largest pile")->required();
  scan->add_option("--out", c.out, "output file (default stdout)");

  auto* table = app.add_subcommand("table", "build and save a remoteness table");
  add_spec(table);
  add_work(table);
  table->add_option("--max", c.max, "largest pile")->required();
  table->add_option("--out", c.out, "table file (default: the cache directory)");

  auto* exp = app.add_subcommand("export", "export a table as JSONL or CSV, or the family catalog as JSON");
  add_spec(exp);
  add_work(exp);
  exp->add_option("--max", c.max, "largest pile");
  exp->add_option("--table", c.table_in, "read this table file instead of building");
  exp->add_option("--format", c.format, "jsonl or csv")->capture_default_str();
  exp->add_flag("--families", c.families, "export the family catalog");
  exp->add_option("--out", c.out, "output file (default stdout)");

  auto* fam = app.add_subcommand("families", "exception family catalog");
  fam->require_subcommand(1);
  auto* verify = fam->add_subcommand("verify", "compare families against brute force");
  verify->add_option("--id", c.id, "family id, or all");
  verify->add_option("--version", c.version, "normal or misere")->capture_default_str();
  verify->add_option("--max", c.max, "largest pile (default 20)");
  verify->add_option("--n", c.n, "a single pile count");
  verify->add_option("--n-min", c.n_min, "smallest pile count");
  verify->add_option("--n-max", c.n_max, "largest pile count");
  verify->add_option("--extensions", c.extensions, "appended piles")->capture_default_str();
  verify->add_flag("--json", c.json, "print JSON reports instead of the summary");
  verify->add_option("--out", c.out, "also write JSON reports here");
  add_work(verify);
  auto* coverage = fam->add_subcommand("coverage", "match every exception of a box to families");
  add_spec(coverage);
  add_work(coverage);
  coverage->add_option("--max", c.max, "largest pile")->required();
  coverage->add_flag("--json", c.json, "print the JSON report instead of the summary");
  coverage->add_option("--out", c.out, "also write the JSON report here");
  auto* list = fam->add_subcommand("list", "list family ids");

  auto* play = app.add_subcommand("play", "play against the engine");
  play->add_option("--piles", c.piles, "starting piles")->required();
  play->add_option("--n", c.n, "number of piles (checked)");
  play->add_option("--k", c.k, "piles reduced per move (default n - 1)");
  play->add_option("--version", c.version, "normal or misere");
  play->add_option("--first", c.first, "human or engine")->capture_default_str();

  auto* cache = app.add_subcommand("cache", "table cache");
  cache->require_subcommand(1);
  auto* info = cache->add_subcommand("info", "list cached tables");
  info->add_option("--dir", c.dir, "cache directory (default SLOWNIM_CACHE_DIR)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (solve->parsed() && solve_version->count() == 0) c.version = "both";

  try {
    if (solve->parsed()) return cmd_solve(c, out);
    if (scan->parsed()) return cmd_scan(c, out, err);
    if (table->parsed()) return cmd_table(c, out);
    if (exp->parsed()) return cmd_export(c, out, err);
    if (verify->parsed()) return cmd_families_verify(c, out);
    if (coverage->parsed()) return cmd_families_coverage(c, out);
    if (list->parsed()) return cmd_families_list(out);
    if (play->parsed()) return cmd_play(c, in, out);
    if (info->parsed()) return cmd_cache_info(c, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::resource ? kResource : kUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kResource;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace slownim::cli
