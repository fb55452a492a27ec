#include "aeg/payoff.hpp"

#include <algorithm>
#include <numeric>

#include "aeg/errors.hpp"

namespace aeg {

std::int64_t energy_level(std::span<const std::int64_t> weights) {
  return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
}

Rational prefix_payoff(std::span<const std::int64_t> weights, PayoffKind kind) {
  const auto n = static_cast<std::int64_t>(weights.size());
  switch (kind) {
    case PayoffKind::EL:
    case PayoffKind::TP:
      return Rational(energy_level(weights));
    case PayoffKind::MP:
      if (n == 0) throw InputError("mean-payoff of an empty prefix");
      return Rational(energy_level(weights), n);
    case PayoffKind::AE: {
      if (n == 0) throw InputError("average-energy of an empty prefix");
      std::int64_t level = 0;
      std::int64_t total = 0;
      for (std::int64_t w : weights) {
        level += w;
        total += level;
      }
      return Rational(total, n);
    }
  }
  throw InputError("unknown payoff kind");
}

ExtendedRational lasso_value(const GameGraph& game, const Lasso& lasso, PayoffKind kind, Variant variant) {
  check_lasso(game, lasso);
  const auto pw = prefix_weights(game, lasso);
  const auto cw = cycle_weights(game, lasso);
  const std::int64_t base = energy_level(pw);
  const std::int64_t drift = energy_level(cw);

  switch (kind) {
    case PayoffKind::EL:
      return Rational(base + drift);
    case PayoffKind::MP:
      return prefix_payoff(cw, PayoffKind::MP);
    case PayoffKind::TP:
    case PayoffKind::AE:
      break;
  }
  if (drift > 0) return ExtendedRational::pos_inf();
  if (drift < 0) return ExtendedRational::neg_inf();

  if (kind == PayoffKind::AE) return prefix_payoff(cw, PayoffKind::AE) + Rational(base);

  std::int64_t level = base;
  std::int64_t lo = base;
  std::int64_t hi = base;
  for (std::int64_t w : cw) {
    level += w;
    lo = std::min(lo, level);
    hi = std::max(hi, level);
  }
  return Rational(variant == Variant::Sup ? hi : lo);
}

bool check_energy_bounds(const GameGraph& game, const Lasso& lasso, const EnergyConstraint& c) {
  check_lasso(game, lasso);
  const bool lower = c.lower || c.upper.has_value();
  auto within = [&](std::int64_t level) {
    if (lower && level < 0) return false;
    if (c.upper && level > *c.upper) return false;
    return true;
  };

  std::int64_t level = 0;
  if (!within(level)) return false;
  for (std::int64_t w : prefix_weights(game, lasso)) {
    level += w;
    if (!within(level)) return false;
  }
  std::int64_t drift = 0;
  for (std::int64_t w : cycle_weights(game, lasso)) {
    level += w;
    drift += w;
    if (!within(level)) return false;
  }
  // Every later traversal shifts the same levels by the cycle's drift.
  if (lower && drift < 0) return false;
  if (c.upper && drift > 0) return false;
  return true;
}

}  // namespace aeg
