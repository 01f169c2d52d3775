#include <set>

#include "support.hpp"
#include "slownim/solver.hpp"

using namespace slownim;

namespace {

std::vector<int> keep_values(const Position& x, const std::vector<int>& idx) {
  std::set<int> v;
  for (int i : idx) v.insert(x[static_cast<std::size_t>(i)]);
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Solver, MisereCalibration) {
  auto s = GameSpec::keep_one(3, Version::misere);
  EXPECT_EQ(remoteness(Position{1, 2, 3}, s), 3);
  EXPECT_EQ(remoteness(Position{1, 3, 4}, s), 5);
  EXPECT_EQ(remoteness(Position{0, 0, 9}, s), 1);
  EXPECT_EQ(winner(Position{0, 0, 9}, s), Winner::N);
}

TEST(Solver, NormalTerminalIsLoss) {
  auto s = GameSpec::keep_one(3, Version::normal);
  EXPECT_EQ(remoteness(Position{0, 0, 7}, s), 0);
  EXPECT_EQ(winner(Position{0, 0, 7}, s), Winner::P);
  EXPECT_EQ(remoteness(Position{1, 2, 3}, s), 3);
  EXPECT_EQ(sg_value(Position{1, 1, 2}, s), 2);
}

TEST(Solver, Errors) {
  Solver misere(GameSpec::keep_one(3, Version::misere));
  EXPECT_ERROR_KIND(misere.sg_value(Position{1, 2, 3}), unsupported_spec);
  EXPECT_ERROR_KIND(misere.remoteness(Position{1, 2}), invalid_input);
  EXPECT_ERROR_KIND(misere.optimal_moves(Position{0, 0, 4}), no_moves);
  Solver k1(GameSpec::make(3, 1, Version::normal));
  EXPECT_ERROR_KIND(k1.optimal_keeps(Position{1, 2, 3}), unsupported_spec);
}

struct SpecCase {
  int n, k, cap;
};

class SolverVsOracle : public ::testing::TestWithParam<SpecCase> {};

TEST_P(SolverVsOracle, RemotenessSgAndMoves) {
  const auto [n, k, cap] = GetParam();
  for (Version v : {Version::normal, Version::misere}) {
    const bool mis = v == Version::misere;
    auto spec = GameSpec::make(n, k, v);
    Solver solver(spec);
    oracle::Game g(n, k, mis);
    for (const auto& p : oracle::sorted_box(n, cap)) {
      Position x = to_position(p);
      const int r = g.remoteness(p);
      ASSERT_EQ(solver.remoteness(x), r) << x.to_string() << " " << spec.to_string();
      if (!mis) ASSERT_EQ(solver.sg_value(x), g.sg(p)) << x.to_string();
      if (is_terminal(x, spec)) continue;
      for (const auto& m : solver.optimal_moves(x)) {
        ASSERT_EQ(g.remoteness(to_piles(m.next)) + 1, r);
      }
      if (spec.is_keep_one()) {
        EXPECT_EQ(keep_values(x, solver.optimal_keeps(x)), g.optimal_keep_values(p))
            << x.to_string();
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallBoxes, SolverVsOracle,
                         ::testing::Values(SpecCase{2, 1, 12}, SpecCase{3, 1, 8}, SpecCase{3, 2, 14},
                                           SpecCase{3, 3, 8}, SpecCase{4, 2, 7}, SpecCase{4, 3, 9},
                                           SpecCase{5, 4, 6}, SpecCase{5, 3, 5}));

TEST(Solver, NormalSgZeroIffEvenRemoteness) {
  Solver s(GameSpec::keep_one(4, Version::normal));
  for (const auto& p : oracle::sorted_box(4, 8)) {
    Position x = to_position(p);
    EXPECT_EQ(s.sg_value(x) == 0, s.remoteness(x) % 2 == 0) << x.to_string();
  }
}

TEST(Solver, RemotenessFoldRule) {
  RemotenessFold f;
  EXPECT_EQ(f.result(Version::misere), 1);
  f.add(3);
  f.add(5);
  EXPECT_EQ(f.result(Version::normal), 6);
  f.add(4);
  f.add(2);
  EXPECT_EQ(f.result(Version::normal), 3);
}
