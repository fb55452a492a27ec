#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "aeg/game.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

/// Line-oriented game text:
///
///     # comment
///     state <id> <1|2>
///     edge <src> <dst> <weight>
///     init <id>
///
/// Identifiers match [A-Za-z0-9_()+,-]+. Throws InputError with the line
/// number on syntax errors and with the validation report on invalid games.
GameGraph parse_game(std::string_view text);

/// States, then edges, then init; states and edges sorted by name.
std::string serialize_game(const GameGraph& game);

/// "s0 s1 ( c0 c1 )": prefix states, then the cycle between standalone
/// parentheses.
Lasso parse_lasso(const GameGraph& game, std::string_view text);
std::string format_lasso(const GameGraph& game, const Lasso& lasso);

/// Strategy text:
///
///     memory-init <m0>
///     at <mem> <state> -> <successor> <next-mem>
///
/// A line at an owned state is a decision plus a memory update; at an
/// opponent state it is only a memory update. Memory stays put on moves
/// without a line. Memoryless strategies use a single memory symbol.
MooreStrategy parse_strategy(const GameGraph& game, std::string_view text, Player owner);
std::string serialize_strategy(const GameGraph& game, const Strategy& strategy);

/// "step,state,energy" followed by one row per position 0..steps of the
/// outcome of the two strategies.
std::string trace_csv(const GameGraph& game, const Strategy& p1, const Strategy& p2, std::size_t steps);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace aeg
