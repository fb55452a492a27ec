#include <gtest/gtest.h>

#include <algorithm>

#include "aeg/errors.hpp"
#include "aeg/fixtures.hpp"
#include "aeg/game.hpp"

namespace aeg {
namespace {

GameDescription two_state() {
  GameDescription d;
  d.states = {{"x", Player::P1}, {"y", Player::P2}};
  d.edges = {{"x", "y", 3}, {"y", "x", -1}, {"y", "y", 0}};
  d.init = "x";
  return d;
}

bool has_kind(const std::vector<Violation>& report, Violation::Kind kind) {
  return std::any_of(report.begin(), report.end(), [&](const Violation& v) { return v.kind == kind; });
}

TEST(Validate, AcceptsWellFormedDescription) { EXPECT_TRUE(validate(two_state()).empty()); }

TEST(Validate, ReportsEveryBrokenInvariant) {
  GameDescription d = two_state();
  d.states.push_back({"x", Player::P2});
  d.states.push_back({"z", Player::P1});
  d.edges.push_back({"x", "y", 4});
  d.edges.push_back({"y", "w", 1});
  d.init = "";
  const auto report = validate(d);
  EXPECT_TRUE(has_kind(report, Violation::Kind::DuplicateState));
  EXPECT_TRUE(has_kind(report, Violation::Kind::DuplicateEdge));
  EXPECT_TRUE(has_kind(report, Violation::Kind::UnknownState));
  EXPECT_TRUE(has_kind(report, Violation::Kind::BlockingState));
  EXPECT_TRUE(has_kind(report, Violation::Kind::BadInit));
}

TEST(GameGraph, BuildRejectsInvalidInput) {
  GameDescription d = two_state();
  d.init = "";
  try {
    (void)GameGraph::build(d);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("missing init"), std::string::npos);
  }
}

TEST(GameGraph, Accessors) {
  const GameGraph g = GameGraph::build(two_state());
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
  const StateIndex x = g.at("x");
  const StateIndex y = g.at("y");
  EXPECT_EQ(g.init(), x);
  EXPECT_EQ(g.owner(y), Player::P2);
  EXPECT_EQ(g.weight(x, y), 3);
  EXPECT_FALSE(g.weight(x, x).has_value());
  EXPECT_EQ(g.out(y).size(), 2u);
  EXPECT_FALSE(g.find("nope").has_value());
  EXPECT_THROW((void)g.at("nope"), InputError);
  EXPECT_EQ(g.max_abs_weight(), 3);
}

TEST(GameGraph, OwnershipQueries) {
  const GameGraph g = GameGraph::build(two_state());
  EXPECT_FALSE(g.sole_owner().has_value());
  // Only y has a choice, so P2 decides.
  EXPECT_EQ(g.deciding_player(), Player::P2);
  EXPECT_EQ(g.with_owner(Player::P1).sole_owner(), Player::P1);
  EXPECT_EQ(fixtures::fig4().deciding_player(), Player::P1);
}

TEST(GameGraph, Transformations) {
  const GameGraph g = GameGraph::build(two_state());
  const GameGraph n = g.negated();
  EXPECT_EQ(n.weight(g.at("x"), g.at("y")), -3);
  EXPECT_EQ(n.owner(g.at("y")), Player::P2);
  EXPECT_EQ(g.with_init(g.at("y")).init(), g.at("y"));
  EXPECT_TRUE(equivalent(g, GameGraph::build(two_state())));
  EXPECT_FALSE(equivalent(g, n));
}

TEST(GameGraph, ReachabilityAndComponents) {
  const GameGraph g = fixtures::fig2a();
  const auto from_v1 = reachable_from(g, g.at("v1"));
  EXPECT_FALSE(from_v1[g.at("v0")]);
  EXPECT_TRUE(from_v1[g.at("v3")]);

  const auto scc = strongly_connected_components(g);
  ASSERT_EQ(scc.components.size(), 2u);
  // Components come sinks first.
  EXPECT_EQ(scc.components.front().size(), 4u);
  EXPECT_EQ(scc.components.back(), std::vector<StateIndex>{g.at("v0")});
  EXPECT_EQ(scc.component[g.at("v1")], scc.component[g.at("v4")]);
}

TEST(Fixtures, RandomGamesAreDeterministicAndWellFormed) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const fixtures::RandomSpec spec{seed, 1 + seed % 7, 4, 0.5, 3, seed % 2 ? 0.8 : 0.0};
    const GameGraph g = fixtures::random_game(spec);
    EXPECT_TRUE(equivalent(g, fixtures::random_game(spec)));
    EXPECT_EQ(g.size(), spec.states);
    EXPECT_LE(g.max_abs_weight(), 4);
    const auto reach = reachable_from(g, g.init());
    EXPECT_TRUE(std::all_of(reach.begin(), reach.end(), [](bool b) { return b; }));
    for (StateIndex s = 0; s < g.size(); ++s) EXPECT_LE(g.out(s).size(), 3u);
  }
  EXPECT_THROW(fixtures::random_game({1, 0, 3, 0.0, 3, 0.0}), InputError);
  EXPECT_THROW(fixtures::random_game({1, 3, 3, 1.5, 3, 0.0}), InputError);
}

TEST(Fixtures, NamedFixtures) {
  const GameGraph f4 = fixtures::fig4();
  EXPECT_EQ(f4.size(), 3u);
  EXPECT_EQ(f4.edge_count(), 5u);
  EXPECT_EQ(f4.weight(f4.at("a"), f4.at("b")), -3);
  const GameGraph m = fixtures::mem_p1(5);
  EXPECT_EQ(m.weight(m.at("s"), m.at("s")), -5);
  EXPECT_EQ(fixtures::mem_p2(2).size(), 8u);
  EXPECT_TRUE(fixtures::named("fig3").has_value());
  EXPECT_FALSE(fixtures::named("memP1").has_value());
  EXPECT_THROW(fixtures::generate("nope", {}), InputError);
}

}  // namespace
}  // namespace aeg
