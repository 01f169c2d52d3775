#include <algorithm>
#include <set>

#include "support.hpp"
#include "slownim/exceptions.hpp"
#include "slownim/families.hpp"

using namespace slownim;

namespace {

bool contains(const std::vector<std::string>& ids, const std::string& id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Position row_position(const std::vector<int>& entries) {
  return Position::canonicalize(entries);
}

std::string parse_error(std::string_view text) {
  try {
    parse_families(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_input);
    return e.what();
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return {};
}

const char* kTiny = R"(slownim-families 1
family T_X
  kind table
  title tiny
  x1 odd min 7
  n = 5
  region core
  row 7,7,8,8,9 | raw (7, 7, 8, 8, 9)
end
)";

}  // namespace

TEST(Catalog, IdsInOrder) {
  std::vector<std::string> ids;
  for (const auto& f : catalog()) ids.push_back(f.id);
  const std::vector<std::string> expected{
      "F_EVEN", "F_ONE",  "F_N4",   "F_HP2",  "F_HP1",  "F_H0A",  "F_H0B",  "T_N5_1",
      "T_N5_2", "T_N5_3", "T_N5_4", "T_N6_1", "T_N6_2", "T_N6_3", "T_N6_4", "T_N6_5",
      "T_M1_1", "T_M1_2", "T_M2_1", "T_M2_2", "T_M2_3", "T_M2_4", "T_M3_1"};
  EXPECT_EQ(ids, expected);
  std::size_t parametric = std::count_if(catalog().begin(), catalog().end(),
                                         [](const Family& f) { return f.kind == FamilyKind::parametric; });
  EXPECT_EQ(parametric, 7u);
  EXPECT_EQ(find_family("F_N4").patterns.size(), 2u);
  EXPECT_EQ(find_family("F_HP1").patterns.size(), 2u);
  EXPECT_EQ(find_family("F_H0A").patterns.size() + find_family("F_H0B").patterns.size(), 4u);
  EXPECT_ERROR_KIND(find_family("F_NOPE"), invalid_input);
}

TEST(Catalog, IffClaims) {
  for (const char* id : {"F_EVEN", "F_ONE", "F_HP2", "F_HP1", "F_H0A", "F_H0B"})
    EXPECT_TRUE(find_family(id).iff_claimed()) << id;
  EXPECT_FALSE(find_family("F_N4").iff_claimed());
  EXPECT_FALSE(find_family("T_N5_1").iff_claimed());
}

TEST(Catalog, Applicability) {
  const auto& even = find_family("F_EVEN").applicability;
  EXPECT_TRUE(even.admits(2));
  EXPECT_FALSE(even.admits(3));
  EXPECT_EQ(even.core_length(2), 4);
  EXPECT_EQ(even.core_length(6), 6);
  const auto& t62 = find_family("T_N6_2").applicability;
  EXPECT_TRUE(t62.admits(11));
  EXPECT_TRUE(t62.admits(15));
  EXPECT_FALSE(t62.admits(13));
  const auto& t65 = find_family("T_N6_5").applicability;
  EXPECT_TRUE(t65.admits(13));
  EXPECT_TRUE(t65.admits(19));
  EXPECT_FALSE(t65.admits(15));
}

TEST(Catalog, BundledTextRoundTrips) {
  auto parsed = parse_families(family_fixture_text());
  ASSERT_EQ(parsed.size(), catalog().size());
  auto tiny = parse_families(kTiny);
  ASSERT_EQ(tiny.size(), 1u);
  EXPECT_EQ(tiny[0].rows.at(0).entries, (std::vector<int>{7, 7, 8, 8, 9}));
  EXPECT_FALSE(tiny[0].rows[0].open);
}

TEST(Catalog, ParseErrors) {
  EXPECT_NE(parse_error("slownim-families 2\n").find("line 1"), std::string::npos);
  parse_error("");
  std::string t = kTiny;
  auto with = [&](const std::string& from, const std::string& to) {
    std::string s = t;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  EXPECT_NE(parse_error(with("kind table", "kind tabular")).find("line 3"), std::string::npos);
  parse_error(with("end\n", ""));
  parse_error(with("row 7,7,8,8,9", "row 7,8,7,8,9"));
  parse_error(with("row 7,7,8,8,9 | raw (7, 7, 8, 8, 9)", "row 7,7,8,8,9 | raw (7, 7, 8, 8, 10)"));
  parse_error(with("row 7,7,8,8,9 | raw (7, 7, 8, 8, 9)", "row 7,7,8,8,9 | corrected | raw (7, 7, 8, 8, 9)"));
  parse_error(with("row 7,7,8,8,9 | raw", "row 5,5,8,8,9 | raw"));
  parse_error(with("n = 5", "n = x1 + i"));
  parse_error(with("  region core\n", "  region core\n  bogus 1\n"));
  parse_error(t + t);  // duplicate id
}

TEST(Fixtures, CorrectedRowsAreFlagged) {
  std::size_t corrected = 0, cleaned = 0;
  for (const auto& f : catalog()) {
    for (const auto& row : f.rows) {
      corrected += row.corrected;
      cleaned += row.cleaned;
      if (row.corrected) EXPECT_NE(row.raw_entries, row.entries) << row.raw;
    }
  }
  EXPECT_EQ(corrected, 10u);
  EXPECT_EQ(cleaned, 2u);
}

// Every row and example is an exception that the family predicate accepts,
// with the printed remoteness; every misprinted cell read literally is not.
TEST(Fixtures, RowsAreExceptions) {
  Evaluator eval(Version::misere, 0);
  std::size_t checked = 0;
  for (const auto& f : catalog()) {
    for (const auto& row : f.rows) {
      Position x = row_position(row.entries);
      EXPECT_TRUE(f.matches(x)) << f.id << " " << x.to_string();
      EXPECT_TRUE(contains(membership(x), f.id)) << f.id << " " << x.to_string();
      ASSERT_TRUE(is_exception(x, eval)) << f.id << " " << x.to_string();
      const int r = eval.remoteness(x);
      EXPECT_EQ(predicted_remoteness(x), r) << f.id << " " << x.to_string();
      if (row.printed_r) EXPECT_EQ(*row.printed_r, r) << f.id << " " << x.to_string();
      if (row.corrected) {
        Position literal = row_position(row.raw_entries);
        EXPECT_FALSE(is_exception(literal, eval)) << f.id << " raw " << row.raw;
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 150u);
}

TEST(Generation, SpecExamples) {
  auto even = generate_members(find_family("F_EVEN"), {.max_entry = 5, .max_extensions = 0, .length = 4});
  EXPECT_EQ(even, (std::vector<Position>{Position{2, 2, 2, 3}, Position{2, 2, 2, 4}, Position{2, 2, 2, 5}}));
  auto n4 = generate_members(find_family("F_N4"), {.max_entry = 7, .max_extensions = 0});
  ASSERT_FALSE(n4.empty());
  EXPECT_EQ(n4.front(), (Position{5, 5, 6, 7}));
  auto hp2 = generate_members(find_family("F_HP2"), {.max_entry = 4, .max_extensions = 0});
  EXPECT_EQ(hp2, (std::vector<Position>{Position{3, 3, 3, 4}}));
  auto ext = generate_members(find_family("F_EVEN"), {.max_entry = 4, .max_extensions = 1, .length = 5});
  EXPECT_TRUE(std::find(ext.begin(), ext.end(), Position{2, 2, 2, 3, 3}) != ext.end());
  EXPECT_TRUE(std::find(ext.begin(), ext.end(), Position{4, 4, 4, 4, 4}) == ext.end());
}

TEST(Generation, AgreesWithPredicate) {
  for (const auto& f : catalog()) {
    auto members = generate_members(f, {.max_entry = 19, .max_extensions = 1});
    EXPECT_TRUE(std::is_sorted(members.begin(), members.end(), [](const Position& a, const Position& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    })) << f.id;
    EXPECT_EQ(std::set<Position>(members.begin(), members.end()).size(), members.size()) << f.id;
    for (const auto& x : members) {
      ASSERT_TRUE(f.matches(x)) << f.id << " " << x.to_string();
      ASSERT_TRUE(contains(membership(x), f.id)) << f.id << " " << x.to_string();
    }
  }
}

TEST(Membership, Examples) {
  EXPECT_TRUE(contains(membership(Position{7, 7, 8, 8, 9}), "F_HP1"));
  EXPECT_TRUE(contains(membership(Position{9, 9, 14, 15}), "T_M1_1"));
  EXPECT_TRUE(membership(Position{1, 1, 1}).empty());
  EXPECT_EQ(membership(Position{2, 2, 2, 3}), (std::vector<std::string>{"F_EVEN"}));
  EXPECT_EQ(membership(Position{1, 2, 3, 7}), (std::vector<std::string>{"F_ONE"}));
}

TEST(Prediction, Remoteness) {
  EXPECT_EQ(predicted_remoteness(Position{2, 2, 2, 3}), 3);
  EXPECT_EQ(predicted_remoteness(Position{5, 5, 7, 8}), 9);
  EXPECT_EQ(predicted_remoteness(Position{3, 3, 3, 4}), 5);
  EXPECT_EQ(predicted_remoteness(Position{11, 11, 18, 19}), 19);
  EXPECT_ERROR_KIND(predicted_remoteness(Position{1, 1, 1}), not_in_catalog);
}

TEST(Prediction, Keeps) {
  auto a = predicted_keep(Position{2, 2, 2, 3});
  EXPECT_EQ(a.optimal, 3);
  EXPECT_EQ(a.m, 2);
  EXPECT_EQ(predicted_keep(Position{1, 3, 4}).optimal, 1);
  auto c = predicted_keep(Position{5, 5, 7, 8});
  EXPECT_EQ(c.optimal, 2);
  EXPECT_EQ(c.m, 3);
  EXPECT_ERROR_KIND(predicted_keep(Position{1, 1, 1}), not_in_catalog);
}

TEST(Verify, EvenFamilyAtFourPiles) {
  auto r = verify_family(find_family("F_EVEN"), GameSpec::keep_one(4, Version::misere), {.max_entry = 14});
  EXPECT_GT(r.true_positives, 0u);
  EXPECT_EQ(r.false_positives, 0u);
  EXPECT_TRUE(r.misses_checked);
  EXPECT_EQ(r.misses, 0u);
  EXPECT_EQ(r.remoteness_mismatches, 0u);
}

TEST(Verify, OneFamily) {
  auto r = verify_family(find_family("F_ONE"), GameSpec::keep_one(3, Version::misere), {.max_entry = 30});
  EXPECT_EQ(r.true_positives, 435u);
  EXPECT_TRUE(r.clean());
  EXPECT_GT(r.remoteness_checked, 0u);
}

TEST(Verify, TableRowsConfirmed) {
  auto r = verify_family(find_family("T_N5_1"), GameSpec::keep_one(5, Version::misere), {.max_entry = 13});
  EXPECT_GT(r.true_positives, 0u);
  EXPECT_EQ(r.false_positives, 0u);
  EXPECT_TRUE(r.failing_rows.empty());
  EXPECT_FALSE(r.misses_checked);

  auto t62 = verify_family(find_family("T_N6_2"), Version::misere, {.max_entry = 36, .max_extensions = 0});
  EXPECT_GT(t62.true_positives, 0u);
  EXPECT_EQ(t62.false_positives, 0u);
  EXPECT_TRUE(t62.skipped_levels.empty());
}

TEST(Verify, WholeCatalogSmallBox) {
  Evaluator eval(Version::misere, 16);
  for (const auto& f : catalog()) {
    auto r = verify_family(f, eval, {.max_entry = 16, .max_extensions = 1, .n_max = 7});
    EXPECT_EQ(r.false_positives, 0u) << f.id;
    EXPECT_EQ(r.remoteness_mismatches, 0u) << f.id;
    if (f.iff_claimed()) EXPECT_EQ(r.misses, 0u) << f.id;
  }
}

TEST(Verify, NormalPlayHasOnlyFalsePositives) {
  auto r = verify_family(find_family("F_EVEN"), GameSpec::keep_one(4, Version::normal), {.max_entry = 8});
  EXPECT_GT(r.false_positives, 0u);
  EXPECT_EQ(r.true_positives, 0u);
}

TEST(Coverage, Examples) {
  auto c3 = coverage_report(GameSpec::keep_one(3, Version::misere), 30);
  EXPECT_EQ(c3.exceptions, 435u);
  EXPECT_TRUE(c3.uncovered.empty());
  EXPECT_TRUE(c3.iff_clean());
  EXPECT_TRUE(contains(c3.never_instantiated, "T_N5_1"));

  auto c4 = coverage_report(GameSpec::keep_one(4, Version::misere), 12);
  EXPECT_EQ(c4.exceptions, 365u);
  EXPECT_TRUE(c4.uncovered.empty());
  EXPECT_TRUE(c4.iff_clean());

  auto n4 = coverage_report(GameSpec::keep_one(4, Version::normal), 12);
  EXPECT_EQ(n4.exceptions, 0u);
  EXPECT_TRUE(n4.uncovered.empty());
}

TEST(Json, Shapes) {
  auto j = to_json(find_family("F_EVEN"));
  EXPECT_EQ(j["id"], "F_EVEN");
  auto r = verify_family(find_family("F_ONE"), GameSpec::keep_one(3, Version::misere), {.max_entry = 10});
  auto jr = to_json(r);
  EXPECT_EQ(jr["falsePositives"], 0);
  EXPECT_EQ(jr["misses"], 0);
  auto jc = to_json(coverage_report(GameSpec::keep_one(3, Version::misere), 10));
  EXPECT_EQ(jc["exceptions"], 45);
}
