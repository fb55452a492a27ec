#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aeg/game.hpp"
#include "aeg/rational.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

/// A zero-energy cycle through `state` with the least average energy among
/// those of length at most |S|.
struct ZeroCycleResult {
  StateIndex state = kNoState;
  std::vector<StateIndex> cycle;  // starts at `state`, wraps back to it
  Rational ae;
  std::size_t length = 0;
  /// Sum of the running levels along the cycle, i.e. length * ae.
  std::int64_t level_sum = 0;
};

/// Exact dynamic program over (step, state, running energy). Ties between
/// optimal cycles go to the lexicographically smallest state sequence.
/// Requires a one-player arena (InputError otherwise) without negative
/// cycles through `s`.
std::optional<ZeroCycleResult> best_zero_cycle(const GameGraph& game, StateIndex s);

/// Least average energy P1 can achieve from `from` when P1 makes every
/// choice: -inf with a reachable negative cycle, otherwise the best
/// combination of a cheapest path and a best zero cycle, +inf when no zero
/// cycle is reachable. The witness play is a simple lasso and witness_p1 the
/// memoryless strategy following it.
SolveResult ae_value_1p(const GameGraph& game, StateIndex from);

struct AeConfig {
  /// Cap on the number of memoryless strategies enumerated per player.
  std::uint64_t max_strategies = 1'000'000;
};

/// Two-player average-energy threshold game: the value is the largest
/// one-player value P2 can leave by committing to a memoryless strategy. P1
/// wins iff the value is at most `t`. Both witnesses are memoryless and
/// optimal. Throws BudgetError when either strategy space exceeds the cap.
SolveResult ae_decide_2p(const GameGraph& game, StateIndex from, const Rational& t, const AeConfig& cfg = {});

/// Rewrites a lasso into a simple one of no larger average energy. Valid when
/// no negative cycle is reachable.
Lasso simplify_lasso(const GameGraph& game, Lasso lasso);

}  // namespace aeg
