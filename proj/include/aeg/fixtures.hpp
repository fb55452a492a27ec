#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aeg/game.hpp"
#include "aeg/reductions.hpp"
#include "aeg/strategy.hpp"

// Reference arenas and instance generators.
namespace aeg::fixtures {

/// One-player cycle v1 v2 v4 v3 with weights 2, 2, -2, -2 entered from v0 by weight 1.
GameGraph fig2a();
/// Same shape with two extra zero-weight steps at the top of the cycle.
GameGraph fig2b();
/// States s, sp, spp: the cycles s-sp and s-spp both sum to zero.
GameGraph fig3();
/// States a, b, c with a self-loop of +2 at a, a +1/0 detour through c and a -3/0 detour through b.
GameGraph fig4();
/// s with a self-loop of -U and a +1/0 round trip through sp; P1 needs U+1 memory states.
GameGraph mem_p1(std::int64_t upper);
/// Eight-state gadget in which P2 wins the bounded-energy objective.
GameGraph mem_p2(std::int64_t upper);

/// Countdown instance with one state, durations {1, 2}, counter 3 (P1 wins).
CountdownGame countdown_win();
/// Countdown instance with one state, duration {2}, counter 1 (P1 loses).
CountdownGame countdown_loss();

struct RandomSpec {
  std::uint64_t seed = 1;
  std::size_t states = 4;
  std::int64_t max_weight = 3;
  double p2_ratio = 0.0;
  std::size_t max_out_degree = 3;
  /// Probability that an edge weighs the difference of two random state
  /// potentials in [0, W] instead of a uniform draw; such edges close zero
  /// cycles.
  double balance = 0.0;
};

/// Connected nonblocking arena: states s0..s{n-1}, init s0, every state
/// reachable from s0, weights in [-W, W], round(n * ratio) P2 states.
/// Deterministic for a given spec.
GameGraph random_game(const RandomSpec& spec);

/// Lasso given by state names.
Lasso lasso(const GameGraph& game, const std::vector<std::string>& prefix, const std::vector<std::string>& cycle);

/// Sample plays on the fixture arenas.
Lasso fig2a_play(const GameGraph& g);
Lasso fig2b_play(const GameGraph& g);
/// (acacacab), (aacab) and (acaab) on fig4.
Lasso fig4_play(const GameGraph& g, int which);

struct GenParams {
  std::int64_t upper = 3;
  std::uint64_t seed = 1;
  std::size_t states = 4;
  std::int64_t max_weight = 3;
  double p2_ratio = 0.0;
  double balance = 0.0;
};

/// Family names: fig2a, fig2b, fig3, fig4, memP1, memP2, random, countdown,
/// countdown-loss. Countdown families yield their lower-bounded image.
/// Throws InputError for unknown names or invalid parameters.
GameGraph generate(const std::string& family, const GenParams& params);

/// The parameterless fixtures by name ("fig4", ...), if `name` is one.
std::optional<GameGraph> named(const std::string& name);

}  // namespace aeg::fixtures
