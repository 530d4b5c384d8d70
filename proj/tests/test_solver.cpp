#include <gtest/gtest.h>

#include <unordered_map>

#include "snort/solver.hpp"
#include "snort/strategy.hpp"
#include "support.hpp"

namespace snort {
namespace {

GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }
GraphPtr k1() { return share(Graph({VertexLabel::grid(1, 1)}, {})); }

TEST(WinsMoving, Examples) {
  Solver solver;
  const Position empty(k1(), 0, 0, 0);
  EXPECT_FALSE(solver.wins_moving(empty, Player::Left));
  EXPECT_FALSE(solver.wins_moving(empty, Player::Right));
  const Position single = Position::initial(k1());
  EXPECT_TRUE(solver.wins_moving(single, Player::Left));
  EXPECT_TRUE(solver.wins_moving(single, Player::Right));
  EXPECT_TRUE(solver.wins_moving(Position::initial(share(build_path(6))), Player::Left));
}

TEST(Outcome, Examples) {
  Solver solver;
  EXPECT_EQ(solver.outcome(Position(k1(), 0, 0, 0)), Outcome::P);
  EXPECT_EQ(solver.outcome(Position::initial(share(build_path(6)))), Outcome::N);
  EXPECT_EQ(solver.outcome(Position(k1(), 1, 1, 0)), Outcome::L);
  EXPECT_EQ(solver.outcome(Position(k1(), 1, 0, 1)), Outcome::R);
}

TEST(BestMoves, Examples) {
  Solver solver;
  const auto t52 = share(build_grid(5, 2));
  const auto best = solver.best_moves(Position::initial(t52), Player::Left);
  EXPECT_NE(std::find(best.begin(), best.end(), t52->index_of(VertexLabel::grid(3, 1))), best.end());
  EXPECT_NE(std::find(best.begin(), best.end(), t52->index_of(VertexLabel::grid(3, 2))), best.end());
  EXPECT_TRUE(std::is_sorted(best.begin(), best.end()));

  EXPECT_EQ(solver.best_moves(Position::initial(k1()), Player::Left), std::vector<int>{0});
  EXPECT_TRUE(solver.best_moves(Position(k1(), 0, 0, 0), Player::Left).empty());
}

TEST(BestMoves, MatchesDefinition) {
  std::mt19937_64 rng(7);
  Solver solver;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = share(testing::random_graph(rng, 4 + trial % 6, 0.4));
    const Position p = testing::random_position(rng, g);
    for (Player mover : {Player::Left, Player::Right}) {
      std::vector<int> expected;
      for (int v : p.legal_moves(mover))
        if (!testing::brute_wins(p.apply_move(mover, v), opponent(mover))) expected.push_back(v);
      EXPECT_EQ(solver.best_moves(p, mover), expected);
      EXPECT_EQ(solver.wins_moving(p, mover), !expected.empty());
    }
  }
}

TEST(SolveFamily, Examples) {
  EXPECT_EQ(solve_family(Family::T2, 7).outcome, Outcome::N);
  EXPECT_EQ(solve_family(Family::BothAddOne3, 1).outcome, Outcome::N);
  EXPECT_EQ(solve_family(Family::RightMinusOnly3, 5).outcome, Outcome::N);
  EXPECT_EQ(solve_family(Family::Path, 6).outcome, Outcome::N);
  const auto sol = solve_family(Family::T3, 4);
  EXPECT_GT(sol.stats.nodes_expanded, 0u);
  EXPECT_LE(sol.stats.memo_hits, sol.stats.nodes_expanded + sol.stats.memo_hits);
}

TEST(SolveFamily, PathsAgreeWithOracle) {
  for (int n = 1; n <= 10; ++n) {
    const auto g = share(build_path(n));
    EXPECT_EQ(Solver().outcome(Position::initial(g)), testing::brute_outcome(Position::initial(g)))
        << "P_" << n;
  }
}

TEST(SolverProperties, OracleEquivalenceRandomPositions) {
  std::mt19937_64 rng(99);
  Solver memo;
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int size = 3 + trial % 8;
    const auto g = share(testing::random_graph(rng, size, 0.25 + 0.05 * (trial % 8)));
    const Position p = testing::random_position(rng, g);
    for (Player mover : {Player::Left, Player::Right}) {
      EXPECT_EQ(memo.wins_moving(p, mover), testing::brute_wins(p, mover));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 300);
}

TEST(SolverProperties, OptionVariantsAgree) {
  std::mt19937_64 rng(1234);
  SolverOptions no_memo;
  no_memo.memo = false;
  SolverOptions greedy;
  greedy.order = MoveOrder::Greedy;
  SolverOptions split;
  split.split_components = true;
  SolverOptions all_on = split;
  all_on.order = MoveOrder::Greedy;
  Solver base, a(no_memo), b(greedy), c(split), d(all_on);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = share(testing::random_graph(rng, 5 + trial % 8, 0.3));
    const Position p = testing::random_position(rng, g);
    for (Player mover : {Player::Left, Player::Right}) {
      const bool expected = base.wins_moving(p, mover);
      EXPECT_EQ(a.wins_moving(p, mover), expected);
      EXPECT_EQ(b.wins_moving(p, mover), expected);
      EXPECT_EQ(c.wins_moving(p, mover), expected);
      EXPECT_EQ(d.wins_moving(p, mover), expected);
      EXPECT_EQ(c.best_moves(p, mover), base.best_moves(p, mover));
    }
  }
}

TEST(SolverProperties, FamiliesAgreeAcrossOptions) {
  SolverOptions split;
  split.split_components = true;
  split.order = MoveOrder::Greedy;
  for (Family family : all_families())
    for (int n = 1; n <= 3; ++n) {
      const auto g = share(build_family(family, n));
      const Position p = Position::initial(g);
      if (g->size() <= 11) EXPECT_EQ(Solver().outcome(p), testing::brute_outcome(p));
      EXPECT_EQ(Solver(split).outcome(p), Solver().outcome(p));
    }
}

TEST(SolverProperties, ColourSwapEquivariance) {
  std::mt19937_64 rng(555);
  Solver solver;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = share(testing::random_graph(rng, 6 + trial % 7, 0.35));
    const Position p = testing::random_position(rng, g);
    EXPECT_EQ(solver.outcome(p.colour_swapped()), swap_colours(solver.outcome(p)));
  }
}

TEST(SolverProperties, DisjointUnionIsP) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 6, 0.5);
    const auto u = share(disjoint_union(g, g));
    EXPECT_EQ(Solver().outcome(Position::initial(u)), Outcome::P);
  }
}

TEST(SolverProperties, MemoKeySoundness) {
  // Collect positions by canonical key and check every collision agrees.
  std::mt19937_64 rng(4242);
  const auto g = share(build_grid(3, 2));
  std::unordered_map<CanonicalKey, bool> seen;
  Solver solver;
  int collisions = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Position p = testing::random_position(rng, g);
    for (Player mover : {Player::Left, Player::Right}) {
      const bool win = solver.wins_moving(p, mover);
      auto [it, inserted] = seen.emplace(p.canonical_key(mover), win);
      if (!inserted) {
        ++collisions;
        EXPECT_EQ(it->second, win);
      }
      const Position swapped = p.colour_swapped();
      EXPECT_EQ(solver.wins_moving(swapped, opponent(mover)), win);
    }
  }
  EXPECT_GT(collisions, 0);
}

TEST(SolverProperties, DeterministicAndCacheIndependent) {
  const auto g = share(build_variant(Family::OneSlant3, 3));
  Solver warm;
  const Position p = Position::initial(g);
  const auto first = warm.best_moves(p, Player::Left);
  EXPECT_EQ(warm.best_moves(p, Player::Left), first);
  warm.clear();
  EXPECT_EQ(warm.stats().nodes_expanded, 0u);
  EXPECT_EQ(warm.best_moves(p, Player::Left), first);
  EXPECT_EQ(Solver().best_moves(p, Player::Left), first);
  // Switching graphs resets the table rather than reusing stale entries.
  const auto other = share(build_variant(Family::BothAddOne3, 3));
  EXPECT_EQ(warm.outcome(Position::initial(other)), Solver().outcome(Position::initial(other)));
  EXPECT_EQ(warm.best_moves(p, Player::Left), first);
}

TEST(SolverBudget, NodeCapRaises) {
  SolverOptions tight;
  tight.node_cap = 50;
  tight.memo = false;
  Solver solver(tight);
  EXPECT_THROW(solver.outcome(Position::initial(share(build_grid(6, 2)))), ResourceExhausted);
  // The cap is per query: a small query afterwards still succeeds.
  EXPECT_TRUE(solver.wins_moving(Position::initial(k1()), Player::Left));
}

TEST(SolverBudget, MemoCapacityRaises) {
  SolverOptions tight;
  tight.memo_capacity = 10;
  Solver solver(tight);
  EXPECT_THROW(solver.outcome(Position::initial(share(build_grid(6, 2)))), ResourceExhausted);
}

TEST(TranspositionTable, GrowsAndCaps) {
  struct Hash {
    std::size_t operator()(std::uint64_t k) const { return mix64(k); }
  };
  TranspositionTable<std::uint64_t, Hash> table(10000);
  for (std::uint64_t k = 0; k < 10000; ++k) table.insert(k, k % 3 == 0);
  EXPECT_EQ(table.size(), 10000u);
  EXPECT_GE(table.capacity() * 7, table.size() * 10);
  for (std::uint64_t k = 0; k < 10000; ++k) ASSERT_EQ(table.find(k), std::optional<bool>(k % 3 == 0));
  EXPECT_FALSE(table.find(123456789).has_value());
  EXPECT_THROW(table.insert(10001, true), ResourceExhausted);
  table.clear();
  EXPECT_EQ(table.size(), 0u);
  EXPECT_FALSE(table.find(5).has_value());
}

TEST(SolverMoves, MoveKeepsState) {
  Solver a;
  const auto g = share(build_grid(4, 2));
  EXPECT_EQ(a.outcome(Position::initial(g)), Outcome::N);
  Solver b = std::move(a);
  EXPECT_GT(b.stats().nodes_expanded, 0u);
  EXPECT_EQ(b.outcome(Position::initial(g)), Outcome::N);
}

}  // namespace
}  // namespace snort
