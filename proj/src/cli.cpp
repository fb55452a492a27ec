#include "aeg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

#include "aeg/ae_solver.hpp"
#include "aeg/classic.hpp"
#include "aeg/composite.hpp"
#include "aeg/errors.hpp"
#include "aeg/fixtures.hpp"
#include "aeg/io.hpp"
#include "aeg/payoff.hpp"
#include "aeg/reductions.hpp"

namespace aeg {

namespace {

// An input error caused by the flags themselves; reported with the usage text.
struct UsageError : InputError {
  using InputError::InputError;
};

struct Options {
  std::string game;
  std::string from;
  std::string objective;
  std::string threshold = "0";
  std::optional<std::int64_t> upper;
  std::optional<std::int64_t> cap;
  std::string schedule = "linear";
  std::string role = "min";
  std::string strategy_out;
  std::string lasso;
  std::string payoff;
  std::string variant = "sup";
  bool lower = false;
  std::string kind;
  std::string out_path;
  std::string family;
  std::uint64_t seed = 1;
  std::size_t states = 4;
  std::int64_t maxw = 3;
  double p2ratio = 0.0;
  double balance = 0.0;
  std::string strategy;
  std::string strategy2;
  std::size_t steps = 0;
  std::string csv;
};

GameGraph load_game(const std::string& spec) {
  if (std::filesystem::exists(spec)) return parse_game(read_file(spec));
  if (auto g = fixtures::named(spec)) return *g;
  throw InputError("cannot open game '" + spec + "' (not a file or a built-in fixture)");
}

int verdict(std::ostream& out, const std::optional<Player>& winner) {
  if (!winner) {
    out << "winner: unknown\n";
    return kExitUnknown;
  }
  out << "winner: " << to_string(*winner) << '\n';
  return *winner == Player::P1 ? kExitP1 : kExitP2;
}

std::int64_t need_upper(const Options& o, const std::string& what) {
  if (!o.upper) throw UsageError(what + " requires --upper");
  if (*o.upper < 0) throw UsageError("--upper must be nonnegative");
  return *o.upper;
}

void save_strategy(const Options& o, const GameGraph& game, const SolveResult& r) {
  if (o.strategy_out.empty()) return;
  if (!r.witness_p1) throw InputError("no P1 strategy to write for this result");
  write_file(o.strategy_out, serialize_strategy(game, *r.witness_p1));
}

int solve(const Options& o, std::ostream& out) {
  GameGraph game = load_game(o.game);
  if (!o.from.empty()) game = game.with_init(game.at(o.from));
  const StateIndex from = game.init();
  const Rational t = Rational::parse(o.threshold);

  if (o.objective == "mp") {
    MpConfig cfg;
    cfg.p1_role = o.role == "max" ? Role::Maximizer : Role::Minimizer;
    const SolveResult r = mp_decide(game, from, t, cfg);
    out << "value: " << r.value << '\n';
    save_strategy(o, game, r);
    return verdict(out, r.winner);
  }
  if (o.objective == "ae") {
    const SolveResult r = ae_decide_2p(game, from, t);
    out << "value: " << r.value << '\n';
    save_strategy(o, game, r);
    return verdict(out, r.winner);
  }
  if (o.objective == "egl") {
    const auto credit = egl_min_credit(game)[from];
    out << "value: " << (credit ? ExtendedRational(*credit) : ExtendedRational::pos_inf()) << '\n';
    return verdict(out, credit && *credit == 0 ? Player::P1 : Player::P2);
  }
  if (o.objective == "eglu") {
    const SolveResult r = eglu_solve(game, need_upper(o, "objective 'eglu'"));
    out << "value: " << r.value << '\n';
    save_strategy(o, game, r);
    return verdict(out, r.winner);
  }
  if (o.objective == "aelu") {
    const SolveResult r = aelu_decide(game, need_upper(o, "objective 'aelu'"), t);
    out << "value: " << r.value << '\n';
    save_strategy(o, game, r);
    return verdict(out, r.winner);
  }
  // ael
  if (o.cap) {
    const Schedule schedule = o.schedule == "doubling" ? Schedule::Doubling : Schedule::Linear;
    const IncrementalOutcome r = ael_incremental_2p(game, from, t, *o.cap, schedule);
    if (r.found) out << "value: " << r.value << '\n';
    out << "upper: " << r.upper << '\n';
    out << "note: " << r.note << '\n';
    if (!r.found) return verdict(out, std::nullopt);
    if (!o.strategy_out.empty()) write_file(o.strategy_out, serialize_strategy(game, *r.strategy));
    return verdict(out, Player::P1);
  }
  if (strategy_count(game, Player::P1) > 1 && strategy_count(game, Player::P2) > 1) {
    throw UsageError("objective 'ael' on a two-player game requires --cap");
  }
  const AelOutcome r = ael_decide_1p(game, from, t);
  out << "value: " << r.result.value << '\n';
  if (r.upper) out << "upper: " << *r.upper << '\n';
  if (r.result.winner == Player::P1) save_strategy(o, game, r.result);
  return verdict(out, r.result.winner);
}

PayoffKind payoff_kind(const std::string& name) {
  if (name == "el") return PayoffKind::EL;
  if (name == "mp") return PayoffKind::MP;
  if (name == "tp") return PayoffKind::TP;
  return PayoffKind::AE;
}

int eval(const Options& o, std::ostream& out) {
  const GameGraph game = load_game(o.game);
  const Lasso lasso = parse_lasso(game, o.lasso);
  const Variant variant = o.variant == "inf" ? Variant::Inf : Variant::Sup;
  out << "value: " << lasso_value(game, lasso, payoff_kind(o.payoff), variant) << '\n';
  if (o.lower || o.upper) {
    EnergyConstraint c;
    c.lower = true;
    c.upper = o.upper;
    out << "feasible: " << (check_energy_bounds(game, lasso, c) ? "true" : "false") << '\n';
  }
  return 0;
}

int reduce(const Options& o, std::ostream& out) {
  const GameGraph game = load_game(o.game);
  GameGraph image = game;
  if (o.kind == "mp2ae") {
    image = mp_to_ae(game).game;
  } else if (o.kind == "expand-lu") {
    image = expand_lu(game, need_upper(o, "kind 'expand-lu'"));
  } else {
    image = ae_to_mp_reweight(game, Rational::parse(o.threshold));
  }
  write_file(o.out_path, serialize_game(image));
  out << "states: " << image.size() << "\nedges: " << image.edge_count() << '\n';
  return 0;
}

int gen(const Options& o, std::ostream& out) {
  fixtures::GenParams p;
  p.upper = o.upper.value_or(3);
  p.seed = o.seed;
  p.states = o.states;
  p.max_weight = o.maxw;
  p.p2_ratio = o.p2ratio;
  p.balance = o.balance;
  const GameGraph game = fixtures::generate(o.family, p);
  write_file(o.out_path, serialize_game(game));
  out << "family: " << o.family << '\n';
  if (o.family == "random") out << "seed: " << o.seed << '\n';
  out << "states: " << game.size() << "\nedges: " << game.edge_count() << '\n';
  return 0;
}

int trace(const Options& o, std::ostream& out) {
  const GameGraph game = load_game(o.game);
  const Strategy p1 = parse_strategy(game, read_file(o.strategy), Player::P1);
  const Strategy p2 = o.strategy2.empty() ? Strategy(MemorylessStrategy::first_arc(game, Player::P2))
                                          : Strategy(parse_strategy(game, read_file(o.strategy2), Player::P2));
  const std::string csv = trace_csv(game, p1, p2, o.steps);
  write_file(o.csv, csv);
  out << "rows: " << o.steps + 1 << '\n';
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Average-energy and related quantitative games on weighted graphs", "aeg"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Solve a threshold game");
  solve_cmd->add_option("--game", o.game, "Game file or built-in fixture name")->required();
  solve_cmd->add_option("--from", o.from, "Start state (default: the game's init)");
  solve_cmd->add_option("--objective", o.objective)->required()->check(CLI::IsMember({"mp", "ae", "egl", "eglu", "aelu", "ael"}));
  solve_cmd->add_option("--threshold", o.threshold, "Threshold P/Q or integer");
  solve_cmd->add_option("--upper", o.upper, "Energy upper bound U");
  solve_cmd->add_option("--cap", o.cap, "Largest bound tried by the incremental procedure");
  solve_cmd->add_option("--schedule", o.schedule)->check(CLI::IsMember({"linear", "doubling"}));
  solve_cmd->add_option("--role", o.role, "P1 minimizes (min) or maximizes (max) mean payoff")
      ->check(CLI::IsMember({"min", "max"}));
  solve_cmd->add_option("--strategy-out", o.strategy_out, "Write P1's witness strategy here");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a payoff on a lasso");
  eval_cmd->add_option("--game", o.game)->required();
  eval_cmd->add_option("--lasso", o.lasso, "e.g. \"a b ( c d )\"")->required();
  eval_cmd->add_option("--payoff", o.payoff)->required()->check(CLI::IsMember({"el", "mp", "tp", "ae"}));
  eval_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"sup", "inf"}));
  eval_cmd->add_flag("--lower", o.lower, "Check the lower energy bound 0");
  eval_cmd->add_option("--upper", o.upper, "Check the upper energy bound U");

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply a game reduction");
  reduce_cmd->add_option("--game", o.game)->required();
  reduce_cmd->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"mp2ae", "expand-lu", "ae2mp"}));
  reduce_cmd->add_option("--upper", o.upper);
  reduce_cmd->add_option("--threshold", o.threshold);
  reduce_cmd->add_option("--out", o.out_path)->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a game");
  gen_cmd->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"fig2a", "fig2b", "fig3", "fig4", "memP1", "memP2", "random", "countdown", "countdown-loss"}));
  gen_cmd->add_option("--upper", o.upper);
  gen_cmd->add_option("--seed", o.seed);
  gen_cmd->add_option("--states", o.states);
  gen_cmd->add_option("--maxw", o.maxw);
  gen_cmd->add_option("--p2ratio", o.p2ratio, "Share of states owned by P2");
  gen_cmd->add_option("--balance", o.balance, "Probability of a potential-difference weight");
  gen_cmd->add_option("--out", o.out_path)->required();

  auto* trace_cmd = app.add_subcommand("trace", "Write the energy trace of a play as CSV");
  trace_cmd->add_option("--game", o.game)->required();
  trace_cmd->add_option("--strategy", o.strategy, "P1 strategy file")->required();
  trace_cmd->add_option("--strategy2", o.strategy2, "P2 strategy file (default: first edge everywhere)");
  trace_cmd->add_option("--steps", o.steps)->required();
  trace_cmd->add_option("--csv", o.csv)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (solve_cmd->parsed()) return solve(o, out);
    if (eval_cmd->parsed()) return eval(o, out);
    if (reduce_cmd->parsed()) return reduce(o, out);
    if (gen_cmd->parsed()) return gen(o, out);
    return trace(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto* sub : app.get_subcommands()) err << sub->help();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace aeg
