#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aeg/game.hpp"
#include "aeg/rational.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

/// A cycle of negative total weight reachable from `from`, treating every
/// edge as available regardless of ownership. The cycle is listed in move
/// order and wraps from its last state to its first.
std::optional<std::vector<StateIndex>> has_reachable_negative_cycle(const GameGraph& game, StateIndex from);

/// Least energy level with which each state can be reached from `from`,
/// with a shortest-path tree for reconstructing those paths.
struct EnergyReach {
  std::vector<std::optional<std::int64_t>> level;  // nullopt: unreachable
  std::vector<StateIndex> parent;                  // kNoState at `from` and unreachable states

  /// States of a minimal-level path from the source to `target`, both included.
  std::vector<StateIndex> path_to(StateIndex target) const;
};

/// Throws InputError when a negative cycle is reachable from `from`.
EnergyReach min_energy_reach(const GameGraph& game, StateIndex from);

enum class Role : std::uint8_t { Minimizer, Maximizer };

struct MpConfig {
  Role p1_role = Role::Minimizer;
  /// Replaces the value-iteration horizon 4 |S|^3 W.
  std::optional<std::uint64_t> horizon;
  /// Skips the cycle-mean shortcut for arenas where only one player chooses.
  bool force_value_iteration = false;
};

/// Mean-payoff value of every state. Arenas where a single player makes all
/// the choices are solved exactly through minimum cycle means; other arenas
/// by finite-horizon value iteration followed by rounding to the nearest
/// rational whose denominator is at most |S|.
std::vector<Rational> mp_values(const GameGraph& game, const MpConfig& cfg = {});

/// Mean-payoff threshold game from `from`: P1 wins iff the value is at most
/// `t` (at least `t` when P1 maximizes). Both witnesses are memoryless and
/// `witness_play` is their outcome from `from`.
SolveResult mp_decide(const GameGraph& game, StateIndex from, const Rational& t, const MpConfig& cfg = {});

/// Bounded-energy safety game: P1 must keep the level in [0, U] from credit
/// 0. The value is 0 when P1 wins and +inf otherwise. P1's witness is a Moore
/// machine on `game` with the energy level as memory; P2's witness is a
/// memoryless strategy on the expanded arena of expand_lu(game, U).
SolveResult eglu_solve(const GameGraph& game, std::int64_t upper);

/// Least initial credit with which P1 keeps the level nonnegative forever,
/// per state; nullopt when no credit suffices.
std::vector<std::optional<std::int64_t>> egl_min_credit(const GameGraph& game);

}  // namespace aeg
