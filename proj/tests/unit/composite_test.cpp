#include <gtest/gtest.h>

#include "aeg/classic.hpp"
#include "aeg/composite.hpp"
#include "aeg/errors.hpp"
#include "aeg/fixtures.hpp"
#include "aeg/oracle.hpp"
#include "aeg/payoff.hpp"
#include "aeg/reductions.hpp"

namespace aeg {
namespace {

GameGraph loop(std::int64_t w) {
  GameDescription d;
  d.states = {{"s", Player::P1}};
  d.edges = {{"s", "s", w}};
  d.init = "s";
  return GameGraph::build(d);
}

TEST(Aelu, Fig4Values) {
  const GameGraph g = fixtures::fig4();
  EXPECT_EQ(aelu_value(g, 3), ExtendedRational(1));
  EXPECT_EQ(aelu_value(g, 0), ExtendedRational::pos_inf());
  EXPECT_EQ(aelu_value(fixtures::mem_p1(3), 3), ExtendedRational(Rational(12, 7)));
}

TEST(Aelu, Decisions) {
  const GameGraph g = fixtures::fig4();
  const SolveResult at_value = aelu_decide(g, 3, Rational(1));
  EXPECT_EQ(at_value.winner, Player::P1);
  ASSERT_TRUE(at_value.witness_play.has_value());
  EXPECT_EQ(lasso_value(g, *at_value.witness_play, PayoffKind::AE), ExtendedRational(1));
  EXPECT_EQ(aelu_decide(g, 3, Rational(9, 10)).winner, Player::P2);
  EXPECT_EQ(aelu_decide(g, 3, Rational(3, 2)).winner, Player::P1);
  // The suboptimal play also meets 3/2 within the bounds.
  const Lasso slow = fixtures::fig4_play(g, 1);
  EXPECT_TRUE(check_energy_bounds(g, slow, EnergyConstraint::bounded(3)));
  EXPECT_LE(lasso_value(g, slow, PayoffKind::AE), ExtendedRational(Rational(3, 2)));
}

TEST(Aelu, MatchesOracleOnExpandedArenas) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const GameGraph g = fixtures::random_game({800 + seed, 2 + seed % 3, 2, 0.3, 2, 0.9});
    const std::int64_t u = 1 + static_cast<std::int64_t>(seed % 3);
    const GameGraph expanded = expand_lu(g, u);
    EXPECT_EQ(aelu_value(g, u), oracle::minimax_value(expanded, expanded.init(), PayoffKind::AE, std::nullopt).value)
        << seed;
  }
}

TEST(AelOnePlayer, Fig4) {
  const GameGraph g = fixtures::fig4();
  const AelOutcome r = ael_decide_1p(g, g.init(), Rational(1));
  EXPECT_EQ(r.result.winner, Player::P1);
  EXPECT_EQ(r.upper, 3601);
  EXPECT_EQ(r.result.value, ExtendedRational(1));
}

TEST(AelOnePlayer, DivergingLoopLoses) {
  const AelOutcome r = ael_decide_1p(loop(1), 0, Rational(100));
  EXPECT_EQ(r.result.winner, Player::P2);
  EXPECT_EQ(r.result.value, ExtendedRational::pos_inf());
}

TEST(AelOnePlayer, OpponentOnlyArenas) {
  // P2 chooses between a +2 loop (diverges) and staying flat.
  GameDescription d;
  d.states = {{"q", Player::P2}, {"x", Player::P1}, {"y", Player::P1}};
  d.edges = {{"q", "x", 1}, {"q", "y", 0}, {"x", "x", 2}, {"y", "y", 0}};
  d.init = "q";
  const GameGraph g = GameGraph::build(d);
  EXPECT_EQ(ael_decide_1p(g, 0, Rational(5)).result.winner, Player::P2);

  // P2 can only pick between two zero-drift loops; the worse one averages 1.
  d.edges = {{"q", "x", 1}, {"q", "y", 0}, {"x", "x", 0}, {"y", "y", 0}};
  const GameGraph flat = GameGraph::build(d);
  const AelOutcome r = ael_decide_1p(flat, 0, Rational(1));
  EXPECT_EQ(r.result.value, ExtendedRational(1));
  EXPECT_EQ(r.result.winner, Player::P1);
  EXPECT_EQ(ael_decide_1p(flat, 0, Rational(1, 2)).result.winner, Player::P2);
}

TEST(AelOnePlayer, RejectsTwoPlayerArenas) {
  const GameGraph g = fixtures::random_game({5, 5, 3, 0.5, 3, 0.0});
  if (strategy_count(g, Player::P1) > 1 && strategy_count(g, Player::P2) > 1) {
    EXPECT_THROW(ael_decide_1p(g, 0, Rational(0)), InputError);
  }
  EXPECT_THROW(ael_decide_1p(fixtures::mem_p2(2), 0, Rational(0)), InputError);
}

TEST(Incremental, Schedules) {
  const GameGraph g = fixtures::fig4();
  const IncrementalOutcome lin = ael_incremental_2p(g, g.init(), Rational(1), 10);
  EXPECT_TRUE(lin.found);
  EXPECT_EQ(lin.upper, 3);
  EXPECT_EQ(lin.value, ExtendedRational(1));
  const IncrementalOutcome dbl = ael_incremental_2p(g, g.init(), Rational(1), 10, Schedule::Doubling);
  EXPECT_TRUE(dbl.found);
  EXPECT_EQ(dbl.upper, 4);

  const IncrementalOutcome none = ael_incremental_2p(loop(1), 0, Rational(5), 50);
  EXPECT_FALSE(none.found);
  EXPECT_EQ(none.upper, 50);
  EXPECT_FALSE(none.strategy.has_value());
  EXPECT_THROW(ael_incremental_2p(loop(1), 0, Rational(5), -1), InputError);
}

TEST(Incremental, CountdownInstances) {
  const CountdownImage win = countdown_to_ael(fixtures::countdown_win());
  const IncrementalOutcome w = ael_incremental_2p(win.game, win.game.init(), win.threshold, 5);
  EXPECT_TRUE(w.found);
  EXPECT_LE(w.upper, 3);
  ASSERT_TRUE(w.strategy.has_value());
  // Every P2 reply keeps the level within the bound found.
  const GameGraph& g = win.game;
  for_each_memoryless(g, Player::P2, 100, [&](const MemorylessStrategy& p2) {
    const auto play = outcome(g, *w.strategy, p2, 30);
    std::int64_t level = 0;
    for (std::size_t i = 1; i < play.size(); ++i) {
      level += *g.weight(play[i - 1], play[i]);
      EXPECT_GE(level, 0);
      EXPECT_LE(level, w.upper);
    }
  });

  const CountdownImage loss = countdown_to_ael(fixtures::countdown_loss());
  EXPECT_FALSE(ael_incremental_2p(loss.game, loss.game.init(), loss.threshold, 6).found);
}

}  // namespace
}  // namespace aeg
