#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "aeg/game.hpp"
#include "aeg/payoff.hpp"
#include "aeg/strategy.hpp"

// Exhaustive reference solvers for small arenas. They are exponential and
// meant for cross-checking the real solvers.
namespace aeg::oracle {

struct OracleBudget {
  std::optional<std::size_t> max_prefix_len;  // default |S| - 1
  std::optional<std::size_t> max_cycle_len;   // default |S|
  std::uint64_t max_strategy_count = 1'000'000;
};

/// Every lasso from `from` whose states are pairwise distinct, within the
/// budget's prefix and cycle lengths, each exactly once. Order: depth-first
/// over arcs in declaration order; at each path, shorter cycles first.
void enumerate_simple_lassos(const GameGraph& game, StateIndex from, const OracleBudget& budget,
                             const std::function<void(const Lasso&)>& visit);

struct LassoOptimum {
  ExtendedRational value = ExtendedRational::pos_inf();
  std::optional<Lasso> witness;
};

/// Optimum of lasso_value over the enumerated lassos that satisfy `c`, every
/// edge being available. Minimum by default, maximum when `maximize`. With no
/// admissible lasso: +inf (resp. -inf) and no witness.
LassoOptimum best_lasso_value(const GameGraph& game, StateIndex from, PayoffKind kind,
                              const std::optional<EnergyConstraint>& c, const OracleBudget& budget = {},
                              bool maximize = false);

/// Value of the game from `from` over memoryless strategies. Enumerating P2
/// gives max over P2 strategies of P1's best lasso; enumerating P1 gives min
/// over P1 strategies of P2's best lasso. The enumerated player's witness is
/// optimal; the other witness is a best response to it. For constrained
/// objectives pass an expanded arena. Throws BudgetError past the cap.
SolveResult minimax_value(const GameGraph& game, StateIndex from, PayoffKind kind,
                          const std::optional<EnergyConstraint>& c, const OracleBudget& budget = {},
                          Player enumerate = Player::P2);

}  // namespace aeg::oracle
