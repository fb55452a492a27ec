#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "aeg/game.hpp"
#include "aeg/rational.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

enum class PayoffKind : std::uint8_t { EL, MP, TP, AE };
enum class Variant : std::uint8_t { Sup, Inf };

/// Energy bounds with initial credit 0: the level must stay >= 0 when `lower`
/// is set and <= `upper` when an upper bound is given (which implies `lower`).
struct EnergyConstraint {
  bool lower = true;
  std::optional<std::int64_t> upper;

  static EnergyConstraint lower_only() { return {true, std::nullopt}; }
  static EnergyConstraint bounded(std::int64_t u) { return {true, u}; }
};

/// Sum of the weights; 0 for an empty list.
std::int64_t energy_level(std::span<const std::int64_t> weights);

/// Payoff of a finite prefix given by its edge weights. EL and TP are the sum,
/// MP the sum over the length, AE the mean of the n running levels. MP and AE
/// reject empty input.
Rational prefix_payoff(std::span<const std::int64_t> weights, PayoffKind kind);

/// Limit payoff of the play prefix . cycle^omega. With d the energy of one
/// cycle: MP = d / |cycle|; d > 0 sends TP and AE to +inf, d < 0 to -inf; for
/// d = 0, AE = EL(prefix) + AE(cycle) and TP ranges over the recurring levels.
/// EL is not a limit payoff; it reports the level after prefix and one cycle.
ExtendedRational lasso_value(const GameGraph& game, const Lasso& lasso, PayoffKind kind, Variant variant = Variant::Sup);

/// Whether every level of prefix . cycle^omega respects the constraint.
bool check_energy_bounds(const GameGraph& game, const Lasso& lasso, const EnergyConstraint& c);

}  // namespace aeg
