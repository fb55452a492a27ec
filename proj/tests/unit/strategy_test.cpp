#include <gtest/gtest.h>

#include "aeg/errors.hpp"
#include "aeg/fixtures.hpp"
#include "aeg/strategy.hpp"

namespace aeg {
namespace {

GameGraph choice_game() {
  GameDescription d;
  d.states = {{"p", Player::P1}, {"q", Player::P2}, {"r", Player::P1}};
  d.edges = {{"p", "q", 1}, {"p", "r", 2}, {"q", "p", 0}, {"q", "r", -1}, {"q", "q", 4}, {"r", "p", 0}};
  d.init = "p";
  return GameGraph::build(d);
}

TEST(Memoryless, CountsAndEnumeratesStrategies) {
  const GameGraph g = choice_game();
  EXPECT_EQ(strategy_count(g, Player::P1), 2u);
  EXPECT_EQ(strategy_count(g, Player::P2), 3u);
  std::set<std::vector<StateIndex>> seen;
  for_each_memoryless(g, Player::P2, 10, [&](const MemorylessStrategy& m) {
    check_strategy(g, m);
    seen.insert(m.choice);
  });
  EXPECT_EQ(seen.size(), 3u);
  EXPECT_THROW(for_each_memoryless(g, Player::P2, 2, [](const MemorylessStrategy&) {}), BudgetError);
}

TEST(Memoryless, RestrictKeepsChosenArcs) {
  const GameGraph g = choice_game();
  MemorylessStrategy m = MemorylessStrategy::first_arc(g, Player::P1);
  const GameGraph rest = restrict(g, m);
  EXPECT_EQ(rest.out(rest.at("p")).size(), 1u);
  EXPECT_EQ(rest.out(rest.at("q")).size(), 3u);
  EXPECT_EQ(rest.sole_owner(), Player::P2);
}

TEST(Lasso, FollowAndSimplicity) {
  const GameGraph g = fixtures::fig4();
  std::vector<StateIndex> succ(g.size());
  succ[g.at("a")] = g.at("c");
  succ[g.at("c")] = g.at("a");
  succ[g.at("b")] = g.at("a");
  const Lasso l = follow(g.at("a"), succ);
  EXPECT_TRUE(l.prefix.empty());
  EXPECT_EQ(l.cycle, (std::vector<StateIndex>{g.at("a"), g.at("c")}));
  EXPECT_TRUE(is_simple(l));
  EXPECT_FALSE(is_simple(fixtures::fig4_play(g, 3)));
  EXPECT_EQ(cycle_weights(g, l), (std::vector<std::int64_t>{1, 0}));
  EXPECT_THROW(check_lasso(g, l, g.at("b")), InputError);
}

TEST(Lasso, StrategyFromLassoReproducesIt) {
  const GameGraph g = fixtures::fig2a();
  const Lasso l = fixtures::fig2a_play(g);
  const MemorylessStrategy m = strategy_from_lasso(g, l, Player::P1);
  const Lasso back = outcome_lasso(g, m, MemorylessStrategy::first_arc(g, Player::P2));
  EXPECT_EQ(back.prefix, l.prefix);
  EXPECT_EQ(back.cycle, l.cycle);
  EXPECT_THROW(strategy_from_lasso(fixtures::fig4(), fixtures::fig4_play(fixtures::fig4(), 3), Player::P1), InputError);
}

TEST(Moore, OutcomeFollowsMemory) {
  const GameGraph g = fixtures::mem_p1(2);
  const StateIndex s = g.at("s");
  const StateIndex sp = g.at("sp");
  // Count round trips through sp; take the loop after two of them.
  MooreStrategy m(Player::P1, {"0", "1", "2"}, 0);
  m.set_output(0, s, sp);
  m.set_output(1, s, sp);
  m.set_output(2, s, s);
  for (MooreStrategy::Memory k = 0; k < 3; ++k) m.set_output(k, sp, s);
  m.set_update(0, s, sp, 1);
  m.set_update(1, s, sp, 2);
  m.set_update(2, s, s, 0);
  const auto play = outcome(g, m, MemorylessStrategy::first_arc(g, Player::P2), 6);
  EXPECT_EQ(play, (std::vector<StateIndex>{s, sp, s, sp, s, s, sp}));
  EXPECT_EQ(m.reachable_memory(g).size(), 3u);
  EXPECT_EQ(owner_of(Strategy(m)), Player::P1);
}

TEST(Moore, MissingDecisionIsReported) {
  const GameGraph g = fixtures::mem_p1(2);
  MooreStrategy m(Player::P1, {"0"}, 0);
  EXPECT_THROW(outcome(g, m, MemorylessStrategy::first_arc(g, Player::P2), 3), InputError);
}

TEST(Moore, MemorylessConversionIsEquivalent) {
  const GameGraph g = choice_game();
  const auto p1 = MemorylessStrategy::first_arc(g, Player::P1);
  const auto p2 = MemorylessStrategy::first_arc(g, Player::P2);
  EXPECT_EQ(outcome(g, as_moore(g, p1), p2, 10), outcome(g, p1, p2, 10));
  EXPECT_EQ(as_moore(g, p1).memory_count(), 1u);
}

}  // namespace
}  // namespace aeg
