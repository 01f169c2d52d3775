// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "slownim/exceptions.hpp"
#include "slownim/families.hpp"
#include "slownim/mrule.hpp"
#include "slownim/solver.hpp"
#include "slownim/table.hpp"

using namespace slownim;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (samples_.size() < 5) samples_.push_back(what);
    }
  }
  Outcome done(std::string summary) const {
    Outcome o{failures_ == 0, std::move(summary)};
    if (failures_) {
      o.detail += "; " + std::to_string(failures_) + " violations";
      for (const auto& s : samples_) o.detail += " [" + s + "]";
    }
    return o;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> samples_;
};

Outcome ac1() {
  Check c;
  auto s = GameSpec::keep_one(3, Version::misere);
  const int a = remoteness(Position{1, 2, 3}, s), b = remoteness(Position{1, 3, 4}, s);
  c.require(a == 3, "R(1,2,3)=" + std::to_string(a));
  c.require(b == 5, "R(1,3,4)=" + std::to_string(b));
  return c.done("misere R(1,2,3)=" + std::to_string(a) + ", R(1,3,4)=" + std::to_string(b));
}

Outcome ac2() {
  Check c;
  std::size_t checked = 0;
  for (int n : {3, 4, 5}) {
    auto spec = GameSpec::keep_one(n, Version::normal);
    SolveTable t = build_table(spec, 12, {.threads = 1});
    for (Rank r = 0; r < t.size(); ++r) {
      const Position x = t.indexer().unrank(r);
      ++checked;
      const int len = m_sequence(x).moves;
      c.require(len == t.at_rank(r), "M!=R at " + x.to_string());
      if (!is_terminal(x, spec)) {
        const int d = t.at_rank(r) - t.at(m_move(x).successor);
        c.require(d == 1, "delta " + std::to_string(d) + " at " + x.to_string());
      }
    }
  }
  return c.done(std::to_string(checked) + " normal-play positions, M(x)=R(x) and delta=1");
}

Outcome ac3() {
  Check c;
  const Family& f = find_family("F_EVEN");
  std::size_t total = 0;
  for (int n : {4, 5, 6}) {
    std::set<Position> found;
    for (const auto& rec : scan_box(GameSpec::keep_one(n, Version::misere), 14)) {
      if (rec.position[0] % 2 != 0) continue;
      found.insert(rec.position);
      c.require(rec.r == rec.position[0] + 1, "R != 2i+1 at " + rec.position.to_string());
    }
    auto gen = generate_members(f, {.max_entry = 14, .max_extensions = n, .length = n});
    std::set<Position> generated(gen.begin(), gen.end());
    for (const auto& x : found)
      c.require(generated.count(x) > 0, "miss " + x.to_string());
    for (const auto& x : generated)
      c.require(found.count(x) > 0, "false positive " + x.to_string());
    total += found.size();
  }
  return c.done(std::to_string(total) + " even-x1 exceptions for n=4..6, cap 14, equal to F_EVEN");
}

Outcome ac4() {
  Check c;
  Evaluator eval(Version::misere, 30);
  std::set<Position> found;
  for (const auto& rec : scan_box(GameSpec::keep_one(3, Version::misere), 30, eval)) {
    if (rec.position[0] != 1) continue;
    const Position& x = rec.position;
    found.insert(x);
    const int x2 = x[1];
    std::set<int> kept;
    for (int k : rec.optimal_keeps) kept.insert(x[k]);
    const int m_value = x[rec.m_keep];
    if (x2 % 2 == 0) {
      c.require(rec.r == x2 + 1, "R at " + x.to_string());
      c.require(kept == std::set<int>{x[2]}, "optimal keep at " + x.to_string());
      c.require(m_value == x2, "M keep at " + x.to_string());
    } else {
      c.require(rec.r == x2 + 2, "R at " + x.to_string());
      c.require(kept == std::set<int>{x2} && x2 != x[2], "optimal keep at " + x.to_string());
      c.require(rec.m_keep == 2, "M keep at " + x.to_string());
    }
  }
  auto gen = generate_members(find_family("F_ONE"), {.max_entry = 30, .max_extensions = 0, .length = 3});
  std::set<Position> generated(gen.begin(), gen.end());
  c.require(generated == found, "set mismatch: generated " + std::to_string(generated.size()) +
                                    ", found " + std::to_string(found.size()));
  return c.done(std::to_string(found.size()) + " x1=1 exceptions at cap 30 equal to F_ONE with R and keep rules");
}

Outcome ac5() {
  Check c;
  const std::pair<Position, int> rows[] = {
      {Position{5, 5, 6, 7}, 7},       {Position{5, 5, 7, 8}, 9},     {Position{7, 7, 10, 11}, 11},
      {Position{9, 9, 14, 15}, 15},    {Position{11, 11, 18, 19}, 19}, {Position{13, 13, 22, 23}, 23},
      {Position{3, 3, 3, 4}, 5},       {Position{5, 5, 5, 5, 6}, 7},
  };
  for (const auto& [x, want] : rows) {
    const int r = remoteness(x, GameSpec::keep_one(static_cast<int>(x.size()), Version::misere));
    c.require(r == want, x.to_string() + " -> " + std::to_string(r));
  }
  c.require(is_exception(Position{7, 7, 8, 8, 9}, GameSpec::keep_one(5, Version::misere)),
            "(7,7,8,8,9) not an exception");
  return c.done("8 tabulated remoteness values and (7,7,8,8,9) exceptional");
}

Outcome ac6() {
  std::vector<ExceptionRecord> minimal;
  for (int n : {3, 4, 5})
    for (auto& rec : scan_box(GameSpec::keep_one(n, Version::misere), 14))
      if (rec.minimal) minimal.push_back(std::move(rec));
  auto report = check_properties(minimal);
  Check c;
  for (const auto& res : report.results) {
    c.require(res.failed == 0, std::string(describe(res.property)) + ": " + std::to_string(res.failed));
  }
  c.require(!minimal.empty(), "no minimal exceptions");
  return c.done(std::to_string(minimal.size()) + " minimal exceptions, 7 properties");
}

Outcome ac7() {
  struct Source {
    int n, cap;
  };
  const Source sources[] = {{3, 60}, {4, 24}, {5, 18}, {6, 16}, {7, 14}};
  std::vector<std::pair<Position, int>> pool;  // core, box cap
  for (auto s : sources)
    for (auto& rec : scan_box(GameSpec::keep_one(s.n, Version::misere), s.cap))
      if (rec.minimal) pool.emplace_back(rec.position, s.cap);
  Check c;
  c.require(pool.size() >= 200, "pool has only " + std::to_string(pool.size()));
  std::mt19937_64 rng(20240601);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<std::size_t>(pool.size(), 200));
  std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  std::size_t checked = 0;
  std::unique_ptr<Evaluator> eval;
  for (const auto& [core, cap] : pool) {
    if (!eval || eval->cap() != cap) eval = std::make_unique<Evaluator>(Version::misere, cap);
    auto rep = check_monotone_extension(core, *eval, 2, cap);
    checked += rep.checked;
    for (const auto& y : rep.failures) c.require(false, y.to_string());
  }
  return c.done(std::to_string(pool.size()) + " sampled minimal exceptions, " + std::to_string(checked) +
                " extensions by 1-2 piles");
}

Outcome ac8() {
  Check c;
  std::string summary;
  for (auto [n, cap] : {std::pair{4, 20}, std::pair{5, 16}}) {
    auto rep = coverage_report(GameSpec::keep_one(n, Version::misere), cap);
    std::size_t fp = 0, mm = 0;
    for (const auto& fr : rep.family_reports) {
      if (!find_family(fr.id).iff_claimed()) continue;
      fp += fr.false_positives;
      mm += fr.remoteness_mismatches;
    }
    c.require(fp == 0 && mm == 0 && rep.iff_clean(),
              "n=" + std::to_string(n) + " fp=" + std::to_string(fp) + " mismatches=" + std::to_string(mm));
    summary += (summary.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + " cap " +
               std::to_string(cap) + ": " + std::to_string(rep.exceptions) + " exceptions, " +
               std::to_string(rep.uncovered.size()) + " uncovered, iff fp/mismatch 0/0";
  }
  return c.done(summary);
}

Outcome ac9() {
  Check c;
  struct Case {
    int n, cap;
  };
  std::mt19937_64 rng(99);
  for (Case cs : {Case{3, 40}, Case{4, 20}, Case{5, 14}}) {
    for (Version v : {Version::normal, Version::misere}) {
      auto spec = GameSpec::keep_one(cs.n, v);
      SolveTable t = build_table(spec, cs.cap);
      Solver solver(spec);
      std::uniform_int_distribution<Rank> pick(0, t.size() - 1);
      for (int i = 0; i < 10000; ++i) {
        const Rank r = pick(rng);
        const Position x = t.indexer().unrank(r);
        c.require(solver.remoteness(x) == t.at_rank(r), spec.to_string() + " " + x.to_string());
      }
    }
  }
  auto spec = GameSpec::keep_one(4, Version::normal);
  SolveTable t = build_table(spec, 12);
  Solver solver(spec);
  for (Rank r = 0; r < t.size(); ++r) {
    const Position x = t.indexer().unrank(r);
    c.require((solver.sg_value(x) == 0) == (t.at_rank(r) % 2 == 0), "sg/R parity at " + x.to_string());
  }
  return c.done("60000 sampled table entries equal recursive R; sg=0 iff R even on (4,3,normal) cap 12 (" +
                std::to_string(t.size()) + " positions)");
}

Outcome ac10() {
  namespace fs = std::filesystem;
  Check c;
  const fs::path dir = fs::temp_directory_path() / "slownim_acceptance";
  fs::create_directories(dir);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  std::size_t bytes = 0;
  for (auto [n, cap] : {std::pair{4, 20}, std::pair{5, 16}}) {
    std::string runs[2];
    int idx = 0;
    for (const char* threads : {"1", "8"}) {
      const fs::path out = dir / ("scan_" + std::string(threads) + ".jsonl");
      std::istringstream in;
      std::ostringstream o, e;
      int code = cli::run({"scan", "--n", std::to_string(n), "--max", std::to_string(cap), "--version",
                           "misere", "--threads", threads, "--out", out.string()},
                          in, o, e);
      c.require(code == 0, "scan exit " + std::to_string(code) + ": " + e.str());
      runs[idx++] = slurp(out);
    }
    c.require(!runs[0].empty() && runs[0] == runs[1], "n=" + std::to_string(n) + " outputs differ");
    bytes += runs[0].size();
  }
  fs::remove_all(dir);
  return c.done("scan --threads 1 vs 8 byte-identical (" + std::to_string(bytes) + " bytes, n=4 and n=5)");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%-4s %s  %s (%.2f s)\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
