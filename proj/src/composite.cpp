#include "aeg/composite.hpp"

#include <stdexcept>
#include <vector>

#include "aeg/ae_solver.hpp"
#include "aeg/classic.hpp"
#include "aeg/errors.hpp"
#include "aeg/reductions.hpp"

namespace aeg {

namespace {

Lasso project(const ExpandedArena& arena, const GameGraph& base, const Lasso& l) {
  Lasso out;
  for (StateIndex v : l.prefix) out.prefix.push_back(base.at(arena.base_name(v)));
  for (StateIndex v : l.cycle) out.cycle.push_back(base.at(arena.base_name(v)));
  return out;
}

bool touches_sink(const ExpandedArena& arena, const Lasso& l) {
  for (const auto* part : {&l.prefix, &l.cycle}) {
    for (StateIndex v : *part) {
      if (arena.is_sink(v)) return true;
    }
  }
  return false;
}

// Largest average energy P2 can reach in `arena` against P1's `strat`.
ExtendedRational worst_response(const ExpandedArena& arena, const MemorylessStrategy& strat) {
  const GameGraph rest = restrict(arena.game(), strat).negated().with_owner(Player::P1);
  return -ae_value_1p(rest, rest.init()).value;
}

}  // namespace

ExtendedRational aelu_value(const GameGraph& game, std::int64_t upper) {
  if (eglu_solve(game, upper).winner == Player::P2) return ExtendedRational::pos_inf();
  const ExpandedArena arena = ExpandedArena::build(game, upper);
  const GameGraph weighted = ae_to_mp_reweight(arena, Rational(upper));
  return mp_values(weighted)[weighted.init()];
}

SolveResult aelu_decide(const GameGraph& game, std::int64_t upper, const Rational& t) {
  SolveResult safety = eglu_solve(game, upper);
  if (safety.winner == Player::P2) {
    safety.value = ExtendedRational::pos_inf();
    safety.witness_p1.reset();
    return safety;
  }
  const ExpandedArena arena = ExpandedArena::build(game, upper);
  const GameGraph weighted = ae_to_mp_reweight(arena, Rational(upper));
  SolveResult mp = mp_decide(weighted, weighted.init(), t);

  SolveResult result;
  result.value = mp.value;
  result.winner = mp.winner;
  result.witness_p2 = mp.witness_p2;
  if (mp.winner == Player::P1) {
    result.witness_p1 = lift_strategy(arena, std::get<MemorylessStrategy>(*mp.witness_p1), game);
  }
  if (mp.witness_play && !touches_sink(arena, *mp.witness_play)) {
    result.witness_play = project(arena, game, *mp.witness_play);
  }
  return result;
}

AelOutcome ael_decide_1p(const GameGraph& game, StateIndex from, const Rational& t) {
  const GameGraph g = game.with_init(from);
  const bool p1_chooses = strategy_count(g, Player::P1) > 1;
  const bool p2_chooses = strategy_count(g, Player::P2) > 1;
  if (p1_chooses && p2_chooses) throw InputError("both players choose; use the incremental procedure with a cap");

  if (!p2_chooses) {
    const std::int64_t upper = ael1p_upper_bound(g, t);
    return {aelu_decide(g, upper, t), upper};
  }

  SolveResult result;
  result.witness_p1 = MemorylessStrategy::first_arc(g, Player::P1);
  const auto credit = egl_min_credit(g)[g.init()];
  if (!credit || *credit > 0) {
    result.value = ExtendedRational::pos_inf();
    result.winner = Player::P2;
    return {result, std::nullopt};
  }
  const GameGraph flipped = g.negated().with_owner(Player::P1);
  const SolveResult worst = ae_value_1p(flipped, g.init());
  result.value = -worst.value;
  result.winner = result.value <= ExtendedRational(t) ? Player::P1 : Player::P2;
  if (worst.witness_play) {
    result.witness_play = worst.witness_play;
    result.witness_p2 = strategy_from_lasso(g, *worst.witness_play, Player::P2);
  }
  return {result, std::nullopt};
}

IncrementalOutcome ael_incremental_2p(const GameGraph& game, StateIndex from, const Rational& t, std::int64_t cap,
                                      Schedule schedule) {
  if (cap < 0) throw InputError("cap must be nonnegative");
  const GameGraph g = game.with_init(from);

  std::vector<std::int64_t> bounds;
  if (schedule == Schedule::Linear) {
    for (std::int64_t u = 0; u <= cap; ++u) bounds.push_back(u);
  } else {
    bounds.push_back(0);
    for (std::int64_t u = 1; u < cap; u *= 2) bounds.push_back(u);
    if (cap > 0) bounds.push_back(cap);
  }

  for (std::int64_t u : bounds) {
    const SolveResult r = aelu_decide(g, u, t);
    if (r.winner != Player::P1) continue;
    const ExpandedArena arena = ExpandedArena::build(g, u);
    const GameGraph weighted = ae_to_mp_reweight(arena, Rational(u));
    const auto memless = std::get<MemorylessStrategy>(*mp_decide(weighted, weighted.init(), t).witness_p1);
    if (!(worst_response(arena, memless) <= ExtendedRational(t))) {
      throw std::logic_error("winning strategy failed verification at U = " + std::to_string(u));
    }
    return {true, u, r.value, std::get<MooreStrategy>(*r.witness_p1), "P1 wins with the energy kept in [0, " + std::to_string(u) + "]"};
  }
  return {false, cap, ExtendedRational::pos_inf(), std::nullopt,
          "inconclusive: no P1 strategy wins while keeping the energy at most " + std::to_string(cap)};
}

}  // namespace aeg
