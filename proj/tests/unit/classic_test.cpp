#include <gtest/gtest.h>

#include "aeg/classic.hpp"
#include "aeg/errors.hpp"
#include "aeg/fixtures.hpp"
#include "aeg/oracle.hpp"
#include "aeg/payoff.hpp"

namespace aeg {
namespace {

GameGraph from_edges(std::vector<StateDecl> states, std::vector<EdgeDecl> edges) {
  GameDescription d;
  d.init = states.front().name;
  d.states = std::move(states);
  d.edges = std::move(edges);
  return GameGraph::build(d);
}

GameGraph loop(std::int64_t w) { return from_edges({{"s", Player::P1}}, {{"s", "s", w}}); }

// P2 at q picks between a mean-0 and a mean-1 self-loop area.
GameGraph p2_mean_choice() {
  return from_edges({{"q", Player::P2}, {"x", Player::P1}, {"y", Player::P1}},
                    {{"q", "x", 0}, {"q", "y", 0}, {"x", "x", 0}, {"y", "y", 1}});
}

TEST(NegativeCycle, Detection) {
  EXPECT_TRUE(has_reachable_negative_cycle(loop(-1), 0).has_value());
  EXPECT_FALSE(has_reachable_negative_cycle(fixtures::fig3(), 0).has_value());
  const GameGraph f4 = fixtures::fig4();
  const auto cyc = has_reachable_negative_cycle(f4, f4.init());
  ASSERT_TRUE(cyc.has_value());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < cyc->size(); ++i) sum += *f4.weight((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]);
  EXPECT_LT(sum, 0);
}

TEST(NegativeCycle, IgnoresUnreachablePart) {
  const GameGraph g = from_edges({{"a", Player::P1}, {"b", Player::P1}}, {{"a", "a", 1}, {"b", "b", -1}, {"b", "a", 0}});
  EXPECT_FALSE(has_reachable_negative_cycle(g, g.at("a")).has_value());
  EXPECT_TRUE(has_reachable_negative_cycle(g, g.at("b")).has_value());
}

TEST(EnergyReach, Fig3) {
  const GameGraph g = fixtures::fig3();
  const EnergyReach r = min_energy_reach(g, g.at("s"));
  EXPECT_EQ(r.level[g.at("s")], 0);
  EXPECT_EQ(r.level[g.at("sp")], -1);
  EXPECT_EQ(r.level[g.at("spp")], 1);
  EXPECT_EQ(r.path_to(g.at("sp")), (std::vector<StateIndex>{g.at("s"), g.at("sp")}));
  EXPECT_EQ(r.path_to(g.at("s")), std::vector<StateIndex>{g.at("s")});
  EXPECT_THROW(min_energy_reach(loop(-1), 0), InputError);
}

TEST(EnergyReach, UnreachableStates) {
  const GameGraph g = fixtures::fig2a();
  const EnergyReach r = min_energy_reach(g, g.at("v1"));
  EXPECT_FALSE(r.level[g.at("v0")].has_value());
  EXPECT_EQ(r.parent[g.at("v0")], kNoState);
}

TEST(MeanPayoff, SmallValues) {
  for (Rational v : mp_values(fixtures::fig2a())) EXPECT_EQ(v, Rational(0));
  EXPECT_EQ(mp_values(loop(-3))[0], Rational(-3));
  const GameGraph g = p2_mean_choice();
  EXPECT_EQ(mp_values(g)[g.at("q")], Rational(1));
  MpConfig keep;
  keep.p1_role = Role::Maximizer;
  EXPECT_EQ(mp_values(fixtures::fig4(), keep)[0], Rational(2));
  EXPECT_EQ(mp_values(fixtures::fig4())[0], Rational(-3, 2));
}

TEST(MeanPayoff, ValueIterationAgreesWithCycleMeans) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const GameGraph g = fixtures::random_game({seed, 2 + seed % 5, 4, 0.0, 3, 0.3});
    MpConfig vi;
    vi.force_value_iteration = true;
    EXPECT_EQ(mp_values(g), mp_values(g, vi)) << "seed " << seed;
    MpConfig keep = vi;
    keep.p1_role = Role::Maximizer;
    MpConfig keep_fast;
    keep_fast.p1_role = Role::Maximizer;
    EXPECT_EQ(mp_values(g, keep), mp_values(g, keep_fast)) << "seed " << seed;
  }
}

TEST(MeanPayoff, TwoPlayerValuesMatchOracle) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const GameGraph g = fixtures::random_game({100 + seed, 2 + seed % 4, 3, 0.5, 3, 0.0});
    const auto brute = oracle::minimax_value(g, g.init(), PayoffKind::MP, std::nullopt);
    EXPECT_EQ(ExtendedRational(mp_values(g)[g.init()]), brute.value) << "seed " << seed;
  }
}

TEST(MeanPayoff, DecideWithWitnesses) {
  const GameGraph f2 = fixtures::fig2a();
  const SolveResult win = mp_decide(f2, f2.init(), Rational(0));
  EXPECT_EQ(win.winner, Player::P1);
  EXPECT_EQ(win.value, ExtendedRational(0));
  EXPECT_EQ(mp_decide(f2, f2.init(), Rational(-1)).winner, Player::P2);

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const GameGraph g = fixtures::random_game({200 + seed, 2 + seed % 4, 3, 0.5, 3, 0.0});
    const Rational v = mp_values(g)[g.init()];
    const SolveResult r = mp_decide(g, g.init(), v);
    ASSERT_EQ(r.winner, Player::P1);
    ASSERT_TRUE(r.witness_p1 && r.witness_p2 && r.witness_play);
    // Against P1's witness P2 cannot push the mean above the value.
    const GameGraph rest = restrict(g, std::get<MemorylessStrategy>(*r.witness_p1));
    MpConfig keep;
    keep.p1_role = Role::Maximizer;
    EXPECT_LE(mp_values(rest.with_owner(Player::P1), keep)[g.init()], v) << "seed " << seed;
    EXPECT_EQ(lasso_value(g, *r.witness_play, PayoffKind::MP), ExtendedRational(v));
  }
}

TEST(BoundedEnergy, Verdicts) {
  const GameGraph f4 = fixtures::fig4();
  EXPECT_EQ(eglu_solve(f4, 3).winner, Player::P1);
  EXPECT_EQ(eglu_solve(f4, 3).value, ExtendedRational(0));
  EXPECT_EQ(eglu_solve(f4, 0).winner, Player::P2);
  EXPECT_EQ(eglu_solve(f4, 0).value, ExtendedRational::pos_inf());
  for (std::int64_t u = 1; u <= 4; ++u) {
    EXPECT_EQ(eglu_solve(fixtures::mem_p1(u), u).winner, Player::P1);
    EXPECT_EQ(eglu_solve(fixtures::mem_p2(u), u).winner, Player::P2);
  }
}

TEST(BoundedEnergy, WitnessKeepsTheBounds) {
  const GameGraph g = fixtures::mem_p1(3);
  const SolveResult r = eglu_solve(g, 3);
  ASSERT_TRUE(r.witness_p1.has_value());
  const auto play = outcome(g, *r.witness_p1, MemorylessStrategy::first_arc(g, Player::P2), 40);
  std::int64_t level = 0;
  for (std::size_t i = 1; i < play.size(); ++i) {
    level += *g.weight(play[i - 1], play[i]);
    EXPECT_GE(level, 0);
    EXPECT_LE(level, 3);
  }
}

TEST(LowerEnergy, MinimalCredit) {
  const GameGraph dip = from_edges({{"x", Player::P1}, {"y", Player::P1}}, {{"x", "y", -1}, {"y", "x", 1}});
  EXPECT_EQ(egl_min_credit(dip)[dip.at("x")], 1);
  EXPECT_EQ(egl_min_credit(dip)[dip.at("y")], 0);
  EXPECT_EQ(egl_min_credit(fixtures::fig4())[0], 0);
  EXPECT_FALSE(egl_min_credit(loop(-1))[0].has_value());
}

}  // namespace
}  // namespace aeg
