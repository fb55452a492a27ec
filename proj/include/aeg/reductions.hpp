#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aeg/game.hpp"
#include "aeg/rational.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

/// Mean-payoff arena turned into an average-energy arena of the same value.
/// Every edge (u, v, w) is split by a fresh midpoint m owned by u's owner into
/// u -> m with weight 2w and m -> v with weight -2w.
struct MpToAeImage {
  GameGraph game;
  /// `state_map[s]` is the image of original state s.
  std::vector<StateIndex> state_map;
};

MpToAeImage mp_to_ae(const GameGraph& game);

/// Arena over (state, charge) pairs with charge in [0, U] plus an absorbing
/// sink. Moves that would leave [0, U] are redirected to the sink (one merged
/// edge of weight 1 per node); the sink loops on itself with weight 1.
///
/// Node names are "(s,c)" and "sink". Node (s, c) has index s * (U + 1) + c
/// when built from a base game; the sink comes last and belongs to P1.
class ExpandedArena {
 public:
  static ExpandedArena build(const GameGraph& base, std::int64_t upper);

  /// Recovers the (state, charge) labelling from node names. Throws
  /// InputError when a name is neither "sink" nor "(s,c)" with 0 <= c.
  static ExpandedArena from_game(const GameGraph& expanded);

  const GameGraph& game() const { return game_; }
  std::int64_t upper() const { return upper_; }
  StateIndex sink() const { return sink_; }
  bool is_sink(StateIndex node) const { return node == sink_; }

  /// Name of the base state carried by `node` (undefined for the sink).
  const std::string& base_name(StateIndex node) const { return base_names_[labels_[node].first]; }
  std::int64_t charge(StateIndex node) const { return labels_[node].second; }
  /// The node for base state `name` at `charge`, if present.
  std::optional<StateIndex> node(const std::string& name, std::int64_t charge) const;

 private:
  ExpandedArena(GameGraph game) : game_(std::move(game)) {}

  GameGraph game_;
  std::int64_t upper_ = 0;
  StateIndex sink_ = kNoState;
  std::vector<std::string> base_names_;
  std::vector<std::pair<std::size_t, std::int64_t>> labels_;  // (base name index, charge)
};

GameGraph expand_lu(const GameGraph& game, std::int64_t upper);

/// Mean-payoff weights on an expanded arena: every edge leaving (s, c) weighs
/// c and the sink loop weighs ceil(t) + 1. Throws InputError when the input
/// does not carry expanded-arena names.
GameGraph ae_to_mp_reweight(const GameGraph& expanded, const Rational& t);
GameGraph ae_to_mp_reweight(const ExpandedArena& arena, const Rational& t);

/// Energy bound large enough for one-player lower-bounded average-energy:
/// max(0, ceil(t)) + N^2 + N^3 with N = W * (|S| + 2). Throws
/// std::overflow_error when it does not fit in 64 bits.
std::int64_t ael1p_upper_bound(const GameGraph& game, const Rational& t);

struct CountdownEdge {
  std::string src;
  std::int64_t duration;
  std::string dst;
};

/// Player 1 picks a positive duration, player 2 a matching successor, and
/// the counter drops by the duration. Player 1 wants to hit exactly zero.
struct CountdownGame {
  std::vector<std::string> states;
  std::vector<CountdownEdge> edges;
  std::string init;
  std::int64_t counter = 1;
};

struct CountdownImage {
  GameGraph game;
  Rational threshold;
};

/// Lower-bounded average-energy game won by P1 at threshold 0 exactly when P1
/// wins the countdown game. States: "start", one P1 state per countdown
/// state, one P2 state "(v,d)" per used duration, and "stop".
CountdownImage countdown_to_ael(const CountdownGame& cd);

/// Moore machine on the base game whose memory is the current charge, built
/// from a memoryless strategy on the expanded arena. Only charges reachable
/// from (init, 0) become memory states. Throws InputError naming the node
/// when the sink is reachable under the strategy.
MooreStrategy lift_strategy(const ExpandedArena& arena, const MemorylessStrategy& memless, const GameGraph& base);

}  // namespace aeg
