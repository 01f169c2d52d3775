#include "slownim/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <regex>
#include <set>

#include "slownim/mrule.hpp"

namespace slownim {

namespace {

constexpr std::size_t kSampleLimit = 20;
constexpr int kMaxLen = static_cast<int>(kMaxPiles);

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto p = s.find(sep);
    if (p == std::string_view::npos) {
      out.push_back(trim(s));
      return out;
    }
    out.push_back(trim(s.substr(0, p)));
    s.remove_prefix(p + sep.size());
  }
}

class ParseError {
 public:
  explicit ParseError(int line) : line_(line) {}
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::invalid_input,
                "family fixtures, line " + std::to_string(line_) + ": " + what);
  }
  int to_int(std::string_view s) const {
    s = trim(s);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail("expected an integer, got '" + std::string(s) + "'");
    return v;
  }

 private:
  int line_;
};

LinearExpr parse_linear(std::string_view text, const ParseError& err) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) err.fail("empty expression");
  LinearExpr e;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + pos, end - pos);
    int sign = 1;
    if (term.front() == '+' || term.front() == '-') {
      sign = term.front() == '-' ? -1 : 1;
      term.remove_prefix(1);
    }
    auto coef = [&](std::string_view head) { return head.empty() ? 1 : err.to_int(head); };
    if (term.ends_with("x1")) {
      e.a += sign * coef(term.substr(0, term.size() - 2));
    } else if (term.ends_with("i")) {
      e.b += sign * coef(term.substr(0, term.size() - 1));
    } else {
      e.c += sign * err.to_int(term);
    }
    pos = end;
  }
  return e;
}

IndexRef parse_index(std::string_view s, const ParseError& err) {
  s = trim(s);
  if (s.empty() || s.front() != 'x') err.fail("expected an entry like x2 or x{n-1}");
  s.remove_prefix(1);
  IndexRef ref;
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}' || s.size() < 3 || s[1] != 'n') err.fail("bad entry index");
    ref.from_n = true;
    std::string_view off = s.substr(2, s.size() - 3);
    ref.value = off.empty() ? 0 : (off.front() == '-' ? -err.to_int(off.substr(1)) : err.to_int(off.substr(1)));
  } else {
    ref.value = err.to_int(s);
  }
  return ref;
}

SubPattern parse_pattern(std::string_view text, const ParseError& err) {
  SubPattern p;
  auto colon = text.find(':');
  if (colon == std::string_view::npos) err.fail("pattern needs 'name: blocks'");
  p.name = std::string(trim(text.substr(0, colon)));
  p.text = std::string(trim(text.substr(colon + 1)));
  for (auto piece : split(text.substr(colon + 1), ";")) {
    auto eq = piece.find('=');
    if (eq == std::string_view::npos) err.fail("block needs '='");
    std::string_view lhs = trim(piece.substr(0, eq));
    Block b;
    auto dots = lhs.find("..");
    b.first = parse_index(lhs.substr(0, dots), err);
    b.last = dots == std::string_view::npos ? b.first : parse_index(lhs.substr(dots + 2), err);
    b.value = parse_linear(piece.substr(eq + 1), err);
    p.blocks.push_back(b);
  }
  return p;
}

FixtureRow parse_row(std::string_view text, const ParseError& err) {
  FixtureRow row;
  auto raw_at = text.find("| raw ");
  if (raw_at == std::string_view::npos) err.fail("row without '| raw'");
  row.raw = std::string(trim(text.substr(raw_at + 6)));
  auto fields = split(trim(text.substr(0, raw_at)), "|");
  std::string_view reading = fields.front();
  if (reading.ends_with('+')) {
    row.open = true;
    reading.remove_suffix(1);
  }
  for (auto v : split(reading, ",")) row.entries.push_back(err.to_int(v));
  for (std::size_t f = 1; f < fields.size(); ++f) {
    if (fields[f] == "cleaned") {
      row.cleaned = true;
    } else if (fields[f] == "corrected") {
      row.corrected = true;
    } else if (fields[f].starts_with("R ")) {
      row.printed_r = err.to_int(fields[f].substr(2));
    } else if (!fields[f].empty()) {
      err.fail("unknown row field '" + std::string(fields[f]) + "'");
    }
  }
  if (row.entries.size() < 2) err.fail("row too short");
  if (!std::is_sorted(row.entries.begin(), row.entries.end())) err.fail("row is not sorted");
  // A cell written as a tuple must carry exactly the cleaned reading.
  if (row.raw.starts_with('(')) {
    static const std::regex number(R"(\d+)");
    for (auto it = std::sregex_iterator(row.raw.begin(), row.raw.end(), number);
         it != std::sregex_iterator(); ++it)
      row.raw_entries.push_back(std::stoi(it->str()));
    bool raw_open = row.raw.find("+)") != std::string::npos;
    if (raw_open != row.open || row.raw_entries.size() != row.entries.size())
      err.fail("reading does not match the shape of the raw cell");
    if ((row.raw_entries != row.entries) != row.corrected)
      err.fail(row.corrected ? "corrected row equals the raw cell" : "reading does not match the raw cell");
  }
  return row;
}

void parse_x1(std::string_view text, Applicability& app, const ParseError& err) {
  std::vector<std::string_view> words;
  for (auto w : split(text, " "))
    if (!w.empty()) words.push_back(w);
  if (words.empty()) err.fail("x1 needs a parity");
  if (words[0] == "odd") app.parity = Parity::odd;
  else if (words[0] == "even") app.parity = Parity::even;
  else if (words[0] == "any") app.parity = Parity::any;
  else err.fail("unknown parity '" + std::string(words[0]) + "'");
  for (std::size_t w = 1; w < words.size(); ++w) {
    auto need = [&](std::size_t count) {
      if (w + count >= words.size()) err.fail("x1: '" + std::string(words[w]) + "' needs a value");
    };
    if (words[w] == "min") {
      need(1);
      app.x1_min = err.to_int(words[++w]);
    } else if (words[w] == "max") {
      need(1);
      app.x1_max = err.to_int(words[++w]);
    } else if (words[w] == "mod") {
      need(2);
      app.modulus = err.to_int(words[++w]);
      app.residue = err.to_int(words[++w]);
      if (app.modulus < 1) err.fail("modulus must be positive");
    } else {
      err.fail("unknown x1 constraint '" + std::string(words[w]) + "'");
    }
  }
}

void parse_n(std::string_view text, Applicability& app, const ParseError& err) {
  text = trim(text);
  if (!text.starts_with('=')) err.fail("expected 'n = ...'");
  text.remove_prefix(1);
  auto slash = text.find('/');
  std::string num(trim(text.substr(0, slash)));
  std::erase(num, '(');
  std::erase(num, ')');
  LinearExpr e = parse_linear(num, err);
  if (e.b != 0) err.fail("n cannot depend on i");
  app.n_a = e.a;
  app.n_c = e.c;
  app.n_d = slash == std::string_view::npos ? 1 : err.to_int(text.substr(slash + 1));
  if (app.n_d < 1) err.fail("divisor must be positive");
}

// Every entry x2..x{n-1} fixed by exactly one block, for every core length
// the family can take.
void check_family(const Family& f, const ParseError& err) {
  const Applicability& app = f.applicability;
  if (f.kind == FamilyKind::parametric) {
    if (f.patterns.empty()) err.fail(f.id + ": parametric family without patterns");
    int hi = app.x1_max.value_or(app.x1_min + 64);
    for (int x1 = app.x1_min; x1 <= hi; ++x1) {
      auto n = app.core_length(x1);
      if (!app.admits(x1) || !n || *n > kMaxLen) continue;
      if (*n < 2) err.fail(f.id + ": core shorter than two piles");
      for (const auto& p : f.patterns) {
        std::vector<int> hits(*n + 1, 0);
        for (const auto& b : p.blocks) {
          int lo = b.first.resolve(*n), up = b.last.resolve(*n);
          for (int j = lo; j <= up; ++j) {
            if (j < 2 || j > *n - 1) err.fail(f.id + ": block outside x2..x{n-1}");
            ++hits[j];
          }
        }
        for (int j = 2; j <= *n - 1; ++j)
          if (hits[j] != 1) err.fail(f.id + ": entry x" + std::to_string(j) + " not fixed exactly once");
      }
    }
  }
  for (const auto& row : f.rows) {
    if (!row.raw.starts_with('(')) continue;
    if (!app.admits(row.x1()) || app.core_length(row.x1()) != static_cast<int>(row.entries.size()))
      err.fail(f.id + ": row " + row.reading() + " outside the family's applicability");
  }
}

bool less_by_length(const Position& a, const Position& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Cores with entries <= max_entry, each tagged with its row (-1 for
// parametric patterns).
void for_each_core(const Family& f, int max_entry, int only_length,
                   const std::function<void(const Position&, int)>& fn) {
  const Applicability& app = f.applicability;
  if (f.kind == FamilyKind::table) {
    for (std::size_t r = 0; r < f.rows.size(); ++r) {
      const FixtureRow& row = f.rows[r];
      int len = static_cast<int>(row.entries.size());
      if (only_length && len != only_length) continue;
      if (row.entries.back() > max_entry) continue;
      std::vector<int> v = row.entries;
      int top = row.open ? max_entry : row.entries.back();
      for (int last = row.entries.back(); last <= top; ++last) {
        v.back() = last;
        fn(Position::canonicalize(v), static_cast<int>(r));
      }
    }
    return;
  }
  int hi = std::min(app.x1_max.value_or(max_entry), max_entry);
  for (int x1 = std::max(app.x1_min, 0); x1 <= hi; ++x1) {
    if (!app.admits(x1)) continue;
    auto n = app.core_length(x1);
    if (!n || *n < 2 || *n > kMaxLen) continue;
    if (only_length && *n != only_length) continue;
    int i_max = f.has_param ? max_entry : 0;
    for (const auto& p : f.patterns) {
      for (int i = 0; i <= i_max; ++i) {
        std::vector<int> v(*n, 0);
        v[0] = x1;
        for (const auto& b : p.blocks)
          for (int j = b.first.resolve(*n); j <= b.last.resolve(*n); ++j) v[j - 1] = b.value.eval(x1, i);
        if (!std::is_sorted(v.begin(), v.end() - 1) || v[*n - 2] < 0) continue;
        if (v[*n - 2] >= max_entry) continue;
        for (int last = v[*n - 2] + 1; last <= max_entry; ++last) {
          v[*n - 1] = last;
          fn(Position::canonicalize(v), -1);
        }
      }
    }
  }
}

void extend(const Position& x, int count, int max_entry, const std::function<void(const Position&)>& fn) {
  if (count == 0) {
    fn(x);
    return;
  }
  if (static_cast<int>(x.size()) >= kMaxLen) return;
  for (int v = x.back(); v <= max_entry; ++v) extend(x.extended(static_cast<Pile>(v)), count - 1, max_entry, fn);
}

// Members of exactly `length` piles (or all lengths when 0), with the row
// that produced each.
std::map<Position, int, decltype(&less_by_length)> members_with_rows(const Family& f,
                                                                     const MemberBounds& b) {
  std::map<Position, int, decltype(&less_by_length)> out(&less_by_length);
  auto take = [&](const Position& core, int row) {
    int len = static_cast<int>(core.size());
    for (int e = 0; e <= b.max_extensions; ++e) {
      if (b.length && len + e != b.length) continue;
      if (len + e > kMaxLen) break;
      extend(core, e, b.max_entry, [&](const Position& m) { out.emplace(m, row); });
    }
  };
  if (b.length) {
    for (int len = std::max(2, b.length - b.max_extensions); len <= b.length; ++len)
      for_each_core(f, b.max_entry, len, take);
  } else {
    for_each_core(f, b.max_entry, 0, take);
  }
  return out;
}

std::optional<int> pattern_core(const Family& f, const Position& x) {
  if (x.size() == 0) return std::nullopt;
  const Applicability& app = f.applicability;
  const int x1 = x[0];
  if (!app.admits(x1)) return std::nullopt;
  auto n = app.core_length(x1);
  if (!n || *n < 2 || *n > static_cast<int>(x.size())) return std::nullopt;
  const int j = *n;
  if (x[j - 1] <= x[j - 2]) return std::nullopt;
  for (const auto& p : f.patterns) {
    int i = 0;
    auto solver = std::find_if(p.blocks.begin(), p.blocks.end(), [&](const Block& b) {
      return b.value.b != 0 && b.first.resolve(j) <= b.last.resolve(j);
    });
    if (solver != p.blocks.end()) {
      int rest = x[solver->first.resolve(j) - 1] - solver->value.a * x1 - solver->value.c;
      if (rest < 0 || rest % solver->value.b != 0) continue;
      i = rest / solver->value.b;
    }
    bool ok = true;
    for (const auto& b : p.blocks)
      for (int k = b.first.resolve(j); k <= b.last.resolve(j) && ok; ++k)
        ok = x[k - 1] == b.value.eval(x1, i);
    if (ok) return j;
  }
  return std::nullopt;
}

std::optional<int> table_core(const Family& f, const Position& x) {
  std::optional<int> best;
  for (const auto& row : f.rows) {
    const std::size_t len = row.entries.size();
    if (len > x.size() || (best && static_cast<int>(len) >= *best)) continue;
    bool ok = true;
    for (std::size_t k = 0; k + 1 < len && ok; ++k) ok = x[k] == row.entries[k];
    if (!ok) continue;
    int last = x[len - 1];
    if (row.open ? last >= row.entries.back() : last == row.entries.back()) best = static_cast<int>(len);
  }
  return best;
}

std::optional<int> shortest_core(const Position& x) {
  std::optional<int> best;
  for (const auto& f : catalog()) {
    auto j = f.matched_core(x);
    if (j && (!best || *j < *best)) best = j;
  }
  return best;
}

nlohmann::ordered_json position_json(const Position& x) { return x.to_vector(); }

nlohmann::ordered_json positions_json(const std::vector<Position>& xs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : xs) arr.push_back(position_json(x));
  return arr;
}

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::odd: return "odd";
    case Parity::even: return "even";
    case Parity::any: break;
  }
  return "any";
}

void push_sample(std::vector<Position>& v, const Position& x) {
  if (v.size() < kSampleLimit) v.push_back(x);
}

}  // namespace

std::string FixtureRow::reading() const {
  std::string s = "(";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(entries[k]);
  }
  if (open) s += '+';
  return s + ")";
}

bool Applicability::admits(int x1) const noexcept {
  if (x1 < x1_min || (x1_max && x1 > *x1_max)) return false;
  if (parity == Parity::odd && x1 % 2 == 0) return false;
  if (parity == Parity::even && x1 % 2 != 0) return false;
  return ((x1 - residue) % modulus + modulus) % modulus == 0;
}

std::optional<int> Applicability::core_length(int x1) const noexcept {
  int num = n_a * x1 + n_c;
  if (num % n_d != 0) return std::nullopt;
  return num / n_d;
}

std::optional<int> Family::matched_core(const Position& x) const {
  return kind == FamilyKind::table ? table_core(*this, x) : pattern_core(*this, x);
}

std::vector<Family> parse_families(std::string_view text) {
  std::vector<Family> out;
  std::optional<Family> cur;
  bool header = false;
  int line_no = 0;
  std::set<std::string> ids;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    ParseError err(line_no);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != "slownim-families 1") err.fail("expected 'slownim-families 1'");
      header = true;
      continue;
    }
    auto sp = line.find(' ');
    std::string_view key = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp + 1));
    if (key == "family") {
      if (cur) err.fail("missing 'end'");
      if (rest.empty() || !ids.insert(std::string(rest)).second) err.fail("missing or duplicate id");
      cur.emplace();
      cur->id = std::string(rest);
      continue;
    }
    if (!cur) err.fail("'" + std::string(key) + "' outside a family block");
    if (key == "end") {
      check_family(*cur, err);
      out.push_back(std::move(*cur));
      cur.reset();
    } else if (key == "kind") {
      if (rest == "parametric") cur->kind = FamilyKind::parametric;
      else if (rest == "table") cur->kind = FamilyKind::table;
      else err.fail("unknown kind");
    } else if (key == "title") {
      cur->title = std::string(rest);
    } else if (key == "iff") {
      cur->iff_group = std::string(rest);
    } else if (key == "x1") {
      parse_x1(rest, cur->applicability, err);
    } else if (key == "n") {
      parse_n(rest, cur->applicability, err);
    } else if (key == "region") {
      if (rest == "core") cur->applicability.extended = false;
      else if (rest == "extended") cur->applicability.extended = true;
      else err.fail("region must be core or extended");
    } else if (key == "param") {
      if (rest != "i >= 0") err.fail("only 'param i >= 0' is supported");
      cur->has_param = true;
    } else if (key == "pattern") {
      cur->patterns.push_back(parse_pattern(rest, err));
    } else if (key == "row" || key == "example") {
      if ((key == "row") != (cur->kind == FamilyKind::table)) err.fail("tables use 'row', parametric families 'example'");
      cur->rows.push_back(parse_row(rest, err));
    } else if (key == "note") {
      cur->notes.emplace_back(rest);
    } else {
      err.fail("unknown key '" + std::string(key) + "'");
    }
  }
  if (cur) ParseError(line_no).fail("missing 'end' at end of text");
  if (!header) ParseError(line_no).fail("empty fixtures");
  return out;
}

const std::vector<Family>& catalog() {
  static const std::vector<Family> families = parse_families(family_fixture_text());
  return families;
}

const Family& find_family(std::string_view id) {
  for (const auto& f : catalog())
    if (f.id == id) return f;
  throw Error(ErrorKind::invalid_input, "unknown family id '" + std::string(id) + "'");
}

std::vector<Position> generate_members(const Family& f, const MemberBounds& bounds) {
  std::vector<Position> out;
  for (auto& [m, row] : members_with_rows(f, bounds)) out.push_back(m);
  return out;
}

std::vector<std::string> membership(const Position& x) {
  std::vector<std::string> ids;
  for (const auto& f : catalog())
    if (f.matches(x)) ids.push_back(f.id);
  return ids;
}

int predicted_remoteness(const Position& x) {
  auto j = shortest_core(x);
  if (!j) throw Error(ErrorKind::not_in_catalog, x.to_string() + " matches no family");
  return round_up_even(x[*j - 2]) + 1;
}

KeepPrediction predicted_keep(const Position& x) {
  auto j = shortest_core(x);
  if (!j) throw Error(ErrorKind::not_in_catalog, x.to_string() + " matches no family");
  KeepPrediction k;
  bool even = x[*j - 2] % 2 == 0;
  k.optimal = even ? *j - 1 : *j - 2;
  k.m = even ? *j - 2 : *j - 1;
  return k;
}

FamilyReport verify_family(const Family& f, Evaluator& eval, const VerifyBounds& bounds) {
  if (bounds.max_entry > eval.cap())
    throw Error(ErrorKind::invalid_input, "evaluator cap is below the verification bound");
  const Applicability& app = f.applicability;
  FamilyReport rep;
  rep.id = f.id;
  rep.version = eval.version();
  rep.max_entry = bounds.max_entry;
  rep.max_extensions = bounds.max_extensions;

  int core_lo = kMaxLen + 1, core_hi = 0;
  auto note_core = [&](int len) {
    core_lo = std::min(core_lo, len);
    core_hi = std::max(core_hi, len);
  };
  if (f.kind == FamilyKind::table) {
    for (const auto& row : f.rows)
      if (row.entries.back() <= bounds.max_entry) note_core(static_cast<int>(row.entries.size()));
  } else {
    int hi = std::min(app.x1_max.value_or(bounds.max_entry), bounds.max_entry);
    for (int x1 = app.x1_min; x1 <= hi; ++x1) {
      auto n = app.core_length(x1);
      if (app.admits(x1) && n && *n >= 2 && *n <= kMaxLen) note_core(*n);
    }
  }
  if (core_hi == 0) return rep;  // nothing within bounds
  int n_lo = bounds.n_min ? bounds.n_min : core_lo;
  int n_hi = bounds.n_max ? bounds.n_max : core_hi + bounds.max_extensions;
  n_lo = std::max(n_lo, 2);
  n_hi = std::min(n_hi, kMaxLen);

  std::vector<const Family*> group;
  if (f.iff_claimed())
    for (const auto& g : catalog())
      if (g.iff_group == f.iff_group) group.push_back(&g);

  std::set<int> bad_rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    if (box_size(n, bounds.max_entry) > bounds.max_entries) {
      rep.skipped_levels.push_back(n);
      continue;
    }
    MemberBounds mb{bounds.max_entry, bounds.max_extensions, n};
    auto members = members_with_rows(f, mb);
    if (members.empty() && !f.iff_claimed()) continue;
    if (eval.table(n) == nullptr) {
      rep.skipped_levels.push_back(n);
      continue;
    }
    rep.levels.push_back(n);
    rep.generated += members.size();
    for (const auto& [m, row] : members) {
      if (is_exception(m, eval)) {
        ++rep.true_positives;
      } else {
        ++rep.false_positives;
        push_sample(rep.false_positive_samples, m);
        if (row >= 0) bad_rows.insert(row);
      }
      auto core = app.core_length(m[0]);
      if (core && *core == n) {
        ++rep.remoteness_checked;
        int r = eval.remoteness(m);
        bool bad = r != round_up_even(m[n - 2]) + 1;
        if (row >= 0 && f.rows[row].printed_r) bad = bad || *f.rows[row].printed_r != r;
        if (bad) {
          ++rep.remoteness_mismatches;
          push_sample(rep.mismatch_samples, m);
        }
      }
    }
    // Worked examples of parametric families: printed R at the core length.
    if (f.kind == FamilyKind::parametric) {
      for (const auto& ex : f.rows) {
        if (static_cast<int>(ex.entries.size()) != n || !ex.printed_r || ex.entries.back() > bounds.max_entry)
          continue;
        Position x = Position::canonicalize(ex.entries);
        ++rep.remoteness_checked;
        if (eval.remoteness(x) != *ex.printed_r) {
          ++rep.remoteness_mismatches;
          push_sample(rep.mismatch_samples, x);
        }
      }
    }
    if (!f.iff_claimed()) continue;
    rep.misses_checked = true;
    std::set<Position> generated;
    for (const Family* g : group)
      for (auto& [m, row] : members_with_rows(*g, mb)) generated.insert(m);
    for (const Position& x : enumerate_box(n, bounds.max_entry)) {
      if (!app.admits(x[0])) continue;
      auto core = app.core_length(x[0]);
      if (!core) continue;
      bool in_region = app.extended ? (*core <= n && n - *core <= bounds.max_extensions) : *core == n;
      if (!in_region || generated.count(x)) continue;
      if (!is_exception(x, eval)) continue;
      // An exception carried by a shorter exceptional prefix belongs to
      // whichever family owns that prefix.
      if (!app.extended && static_cast<int>(minimal_core(x, eval).size()) < n) continue;
      ++rep.misses;
      push_sample(rep.miss_samples, x);
    }
  }
  for (int r : bad_rows) rep.failing_rows.push_back(f.rows[r].raw);
  return rep;
}

FamilyReport verify_family(const Family& f, Version version, const VerifyBounds& bounds) {
  Evaluator::Options opts;
  opts.build.threads = bounds.threads;
  opts.build.max_entries = bounds.max_entries;
  Evaluator eval(version, bounds.max_entry, opts);
  return verify_family(f, eval, bounds);
}

FamilyReport verify_family(const Family& f, const GameSpec& spec, const VerifyBounds& bounds) {
  if (!spec.is_keep_one()) throw Error(ErrorKind::unsupported_spec, "families are defined for k = n - 1");
  VerifyBounds b = bounds;
  b.n_min = b.n_max = spec.n;
  return verify_family(f, spec.version, b);
}

bool CoverageReport::iff_clean() const noexcept {
  for (const auto& r : family_reports) {
    bool iff = false;
    for (const auto& f : catalog())
      if (f.id == r.id) iff = f.iff_claimed();
    if (iff && (r.false_positives || r.remoteness_mismatches)) return false;
  }
  return true;
}

CoverageReport coverage_report(const GameSpec& spec, int cap, Evaluator& eval, const ScanOptions& options) {
  CoverageReport rep;
  rep.spec = spec;
  rep.cap = cap;
  auto records = scan_box(spec, cap, eval, options);
  std::map<std::string, std::size_t> hits;
  for (const auto& rec : records) {
    ++rep.exceptions;
    if (rec.minimal) ++rep.minimal;
    auto ids = membership(rec.position);
    for (const auto& id : ids) ++hits[id];
    if (ids.empty()) {
      rep.uncovered.push_back(rec.position);
      if (rec.minimal) rep.uncovered_minimal.push_back(rec.position);
    }
  }
  VerifyBounds vb;
  vb.max_entry = cap;
  vb.max_extensions = spec.n;
  vb.n_min = vb.n_max = spec.n;
  vb.max_entries = options.max_entries;
  vb.threads = options.threads;
  for (const auto& f : catalog()) {
    std::size_t h = hits.count(f.id) ? hits[f.id] : 0;
    rep.hits.emplace_back(f.id, h);
    if (h == 0) rep.never_instantiated.push_back(f.id);
    // The catalog describes misere play; normal play has no exceptions.
    if (spec.version == Version::misere) rep.family_reports.push_back(verify_family(f, eval, vb));
  }
  return rep;
}

CoverageReport coverage_report(const GameSpec& spec, int cap, const ScanOptions& options) {
  Evaluator::Options opts;
  opts.build.threads = options.threads;
  opts.build.max_entries = options.max_entries;
  Evaluator eval(spec.version, cap, opts);
  return coverage_report(spec, cap, eval, options);
}

void attach_families(ExceptionRecord& rec) { rec.families = membership(rec.position); }

nlohmann::ordered_json to_json(const Family& f) {
  nlohmann::ordered_json j;
  const Applicability& app = f.applicability;
  j["id"] = f.id;
  j["kind"] = f.kind == FamilyKind::table ? "table" : "parametric";
  j["title"] = f.title;
  j["iff"] = f.iff_claimed() ? nlohmann::ordered_json(f.iff_group) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json a;
  a["parity"] = to_string(app.parity);
  a["x1Min"] = app.x1_min;
  a["x1Max"] = app.x1_max ? nlohmann::ordered_json(*app.x1_max) : nlohmann::ordered_json(nullptr);
  a["modulus"] = app.modulus;
  a["residue"] = app.residue;
  a["n"] = {{"x1", app.n_a}, {"constant", app.n_c}, {"divisor", app.n_d}};
  a["region"] = app.extended ? "extended" : "core";
  j["applicability"] = a;
  auto pats = nlohmann::ordered_json::array();
  for (const auto& p : f.patterns) pats.push_back({{"name", p.name}, {"blocks", p.text}});
  j["patterns"] = pats;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : f.rows) {
    nlohmann::ordered_json row;
    row["piles"] = r.entries;
    row["open"] = r.open;
    row["R"] = r.printed_r ? nlohmann::ordered_json(*r.printed_r) : nlohmann::ordered_json(nullptr);
    row["cleaned"] = r.cleaned;
    row["corrected"] = r.corrected;
    row["raw"] = r.raw;
    rows.push_back(row);
  }
  j[f.kind == FamilyKind::table ? "rows" : "examples"] = rows;
  j["notes"] = f.notes;
  return j;
}

nlohmann::ordered_json to_json(const FamilyReport& r) {
  nlohmann::ordered_json j;
  j["familyId"] = r.id;
  j["version"] = to_string(r.version);
  j["box"] = {{"maxEntry", r.max_entry},
              {"maxExtensions", r.max_extensions},
              {"levels", r.levels},
              {"skippedLevels", r.skipped_levels}};
  j["generated"] = r.generated;
  j["truePositives"] = r.true_positives;
  j["falsePositives"] = r.false_positives;
  j["misses"] = r.misses_checked ? nlohmann::ordered_json(r.misses) : nlohmann::ordered_json(nullptr);
  j["remotenessChecked"] = r.remoteness_checked;
  j["remotenessMismatches"] = r.remoteness_mismatches;
  j["falsePositiveSamples"] = positions_json(r.false_positive_samples);
  j["missSamples"] = positions_json(r.miss_samples);
  j["mismatchSamples"] = positions_json(r.mismatch_samples);
  j["failingRows"] = r.failing_rows;
  return j;
}

nlohmann::ordered_json to_json(const CoverageReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.spec.n;
  j["k"] = r.spec.k;
  j["version"] = to_string(r.spec.version);
  j["cap"] = r.cap;
  j["exceptions"] = r.exceptions;
  j["minimal"] = r.minimal;
  nlohmann::ordered_json hits;
  for (const auto& [id, h] : r.hits) hits[id] = h;
  j["hits"] = hits;
  j["uncovered"] = positions_json(r.uncovered);
  j["uncoveredMinimal"] = positions_json(r.uncovered_minimal);
  j["neverInstantiated"] = r.never_instantiated;
  auto reps = nlohmann::ordered_json::array();
  for (const auto& f : r.family_reports) reps.push_back(to_json(f));
  j["families"] = reps;
  j["iffClean"] = r.iff_clean();
  return j;
}

}  // namespace slownim
