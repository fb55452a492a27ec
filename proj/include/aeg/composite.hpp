#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "aeg/game.hpp"
#include "aeg/rational.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

/// Average energy P1 can guarantee from the initial state while keeping the
/// level in [0, U]: +inf when P1 cannot stay within the bounds, otherwise a
/// value in [0, U]. Solved through the expanded arena and a mean-payoff game.
ExtendedRational aelu_value(const GameGraph& game, std::int64_t upper);

/// Threshold version of aelu_value. When P1 wins, witness_p1 is a Moore
/// machine on `game` tracking the energy level and witness_play is the
/// projected optimal play. witness_p2 is always a memoryless strategy on the
/// expanded arena.
SolveResult aelu_decide(const GameGraph& game, std::int64_t upper, const Rational& t);

struct AelOutcome {
  SolveResult result;
  /// The energy bound the verdict was computed with (one-player P1 arenas).
  std::optional<std::int64_t> upper;
};

/// Lower-bounded average-energy game in which only one player chooses. A P1
/// arena is decided through the bounded variant at the bound from
/// ael1p_upper_bound; in a P2 arena P2 wins by breaking either the energy
/// bound or the threshold. Throws InputError when both players choose.
AelOutcome ael_decide_1p(const GameGraph& game, StateIndex from, const Rational& t);

enum class Schedule : std::uint8_t { Linear, Doubling };

/// Result of the incremental procedure: either a verified win at some bound
/// or an inconclusive answer at the cap.
struct IncrementalOutcome {
  bool found = false;
  std::int64_t upper = 0;  // winning bound, or the cap when not found
  ExtendedRational value = ExtendedRational::pos_inf();  // bounded value at `upper` when found
  std::optional<MooreStrategy> strategy;
  std::string note;
};

/// Solves the bounded variant for increasing bounds up to `cap` (every bound,
/// or 0, 1, 2, 4, ... and the cap) and stops at the first P1 win, after
/// checking the winning strategy against every memoryless P2 response.
IncrementalOutcome ael_incremental_2p(const GameGraph& game, StateIndex from, const Rational& t, std::int64_t cap,
                                      Schedule schedule = Schedule::Linear);

}  // namespace aeg
