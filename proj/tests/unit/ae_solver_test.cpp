#include <gtest/gtest.h>

#include "aeg/ae_solver.hpp"
#include "aeg/errors.hpp"
#include "aeg/fixtures.hpp"
#include "aeg/oracle.hpp"
#include "aeg/payoff.hpp"
#include "aeg/reductions.hpp"

namespace aeg {
namespace {

GameGraph from_edges(std::vector<StateDecl> states, std::vector<EdgeDecl> edges) {
  GameDescription d;
  d.init = states.front().name;
  d.states = std::move(states);
  d.edges = std::move(edges);
  return GameGraph::build(d);
}

// P2 at q enters one of two zero-cycle gadgets: x <-> x2 with levels 2, 0
// (AE 1), or y <-> y2 with levels 4, 0 (AE 2).
GameGraph gadget_choice() {
  return from_edges({{"q", Player::P2}, {"x", Player::P1}, {"x2", Player::P1}, {"y", Player::P1}, {"y2", Player::P1}},
                    {{"q", "x", 0}, {"q", "y", 0}, {"x", "x2", 2}, {"x2", "x", -2}, {"y", "y2", 4}, {"y2", "y", -4}});
}

TEST(ZeroCycle, Fig3PrefersTheDip) {
  const GameGraph g = fixtures::fig3();
  const auto z = best_zero_cycle(g, g.at("s"));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->cycle, (std::vector<StateIndex>{g.at("s"), g.at("sp")}));
  EXPECT_EQ(z->ae, Rational(-1, 2));
  EXPECT_EQ(z->length, 2u);
  EXPECT_EQ(z->level_sum, -1);
}

TEST(ZeroCycle, TrivialAndAbsentCases) {
  const GameGraph flat = from_edges({{"s", Player::P1}}, {{"s", "s", 0}});
  const auto z = best_zero_cycle(flat, 0);
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->length, 1u);
  EXPECT_EQ(z->ae, Rational(0));
  const GameGraph up = from_edges({{"s", Player::P1}}, {{"s", "s", 2}});
  EXPECT_FALSE(best_zero_cycle(up, 0).has_value());
}

TEST(OnePlayer, FixtureValues) {
  const GameGraph f3 = fixtures::fig3();
  const SolveResult r = ae_value_1p(f3, f3.at("s"));
  EXPECT_EQ(r.value, ExtendedRational(Rational(-1, 2)));
  ASSERT_TRUE(r.witness_play.has_value());
  EXPECT_TRUE(is_simple(*r.witness_play));
  EXPECT_EQ(lasso_value(f3, *r.witness_play, PayoffKind::AE), r.value);

  const GameGraph down = from_edges({{"s", Player::P1}}, {{"s", "s", -1}});
  EXPECT_EQ(ae_value_1p(down, 0).value, ExtendedRational::neg_inf());
  const GameGraph up = from_edges({{"s", Player::P1}}, {{"s", "s", 1}});
  EXPECT_EQ(ae_value_1p(up, 0).value, ExtendedRational::pos_inf());
  // a -> b -> a sums to -3.
  const GameGraph f4 = fixtures::fig4();
  EXPECT_EQ(ae_value_1p(f4, f4.init()).value, ExtendedRational::neg_inf());
  EXPECT_EQ(ae_value_1p(fixtures::fig2a(), 0).value, ExtendedRational(3));
}

TEST(OnePlayer, RejectsP2Choices) { EXPECT_THROW(ae_value_1p(gadget_choice(), 0), InputError); }

TEST(OnePlayer, WitnessesAreOptimalSimpleLassos) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const GameGraph g = fixtures::random_game({400 + seed, 2 + seed % 6, 3, 0.0, 3, 0.9});
    const SolveResult r = ae_value_1p(g, g.init());
    EXPECT_EQ(r.value, oracle::best_lasso_value(g, g.init(), PayoffKind::AE, std::nullopt).value) << seed;
    if (!r.value.is_finite()) continue;
    ASSERT_TRUE(r.witness_play && r.witness_p1) << seed;
    EXPECT_TRUE(is_simple(*r.witness_play));
    EXPECT_EQ(lasso_value(g, *r.witness_play, PayoffKind::AE), r.value) << seed;
    const Lasso played = outcome_lasso(g, std::get<MemorylessStrategy>(*r.witness_p1),
                                       MemorylessStrategy::first_arc(g, Player::P2));
    EXPECT_EQ(lasso_value(g, played, PayoffKind::AE), r.value) << seed;
  }
}

TEST(TwoPlayer, GadgetChoice) {
  const GameGraph g = gadget_choice();
  const SolveResult r = ae_decide_2p(g, 0, Rational(2));
  EXPECT_EQ(r.value, ExtendedRational(2));
  EXPECT_EQ(r.winner, Player::P1);
  ASSERT_TRUE(r.witness_p2.has_value());
  EXPECT_EQ(std::get<MemorylessStrategy>(*r.witness_p2).choice[g.at("q")], g.at("y"));
  EXPECT_EQ(ae_decide_2p(g, 0, Rational(3, 2)).winner, Player::P2);
}

TEST(TwoPlayer, OnePlayerInputMatchesOnePlayerSolver) {
  const GameGraph f3 = fixtures::fig3();
  EXPECT_EQ(ae_decide_2p(f3, 0, Rational(0)).value, ae_value_1p(f3, 0).value);
}

TEST(TwoPlayer, ReducedMeanPayoffGame) {
  // P2 picks between self-loops of weight 1 and 2: mean-payoff value 2.
  const GameGraph mp = from_edges({{"q", Player::P2}, {"a", Player::P1}, {"b", Player::P1}},
                                  {{"q", "a", 0}, {"q", "b", 0}, {"a", "a", 1}, {"b", "b", 2}});
  const MpToAeImage image = mp_to_ae(mp);
  EXPECT_EQ(ae_decide_2p(image.game, image.state_map[0], Rational(2)).value, ExtendedRational(2));
}

TEST(TwoPlayer, WitnessesAreMutualBestResponses) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const GameGraph g = fixtures::random_game({600 + seed, 2 + seed % 5, 3, 0.5, 3, 0.9});
    const SolveResult r = ae_decide_2p(g, g.init(), Rational(0));
    ASSERT_TRUE(r.witness_p1 && r.witness_p2) << seed;
    const auto& p1 = std::get<MemorylessStrategy>(*r.witness_p1);
    const auto& p2 = std::get<MemorylessStrategy>(*r.witness_p2);
    // P2 cannot beat P1's witness and P1 cannot beat P2's witness.
    const GameGraph vs_p1 = restrict(g, p1).negated().with_owner(Player::P1);
    EXPECT_EQ(-ae_value_1p(vs_p1, g.init()).value, r.value) << seed;
    EXPECT_EQ(ae_value_1p(restrict(g, p2).with_owner(Player::P1), g.init()).value, r.value) << seed;
  }
}

TEST(TwoPlayer, BudgetIsEnforced) {
  AeConfig tiny;
  tiny.max_strategies = 1;
  EXPECT_THROW(ae_decide_2p(gadget_choice(), 0, Rational(0), tiny), BudgetError);
}

TEST(Simplify, CutsPrefixLoopsAndKeepsTheBetterCycle) {
  const GameGraph f3 = fixtures::fig3();
  // s spp s ( s sp ) -> ( s sp ) after cutting the prefix loop.
  const Lasso l = fixtures::lasso(f3, {"s", "spp"}, {"s", "sp"});
  const Lasso simple = simplify_lasso(f3, l);
  EXPECT_TRUE(is_simple(simple));
  EXPECT_LE(lasso_value(f3, simple, PayoffKind::AE), lasso_value(f3, l, PayoffKind::AE));
  // ( s sp s spp ) mixes the two cycles; the s-sp part alone is better.
  const Lasso mixed = fixtures::lasso(f3, {}, {"s", "sp", "s", "spp"});
  const Lasso best = simplify_lasso(f3, mixed);
  EXPECT_EQ(lasso_value(f3, best, PayoffKind::AE), ExtendedRational(Rational(-1, 2)));
}

}  // namespace
}  // namespace aeg
