#include "aeg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <optional>
#include <sstream>
#include <tuple>

#include "aeg/errors.hpp"

namespace aeg {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

bool valid_ident(const std::string& id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '(' || c == ')' || c == '+' || c == ',' || c == '-';
  });
}

std::int64_t parse_int(const std::string& word, const std::string& where) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || ptr != word.data() + word.size()) throw InputError(where + ": expected an integer, got '" + word + "'");
  return v;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto words = split_words(line);
    if (!words.empty() && words[0][0] != '#') f(number, words);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

GameGraph parse_game(std::string_view text) {
  GameDescription d;
  bool has_init = false;
  for_each_line(text, [&](std::size_t number, const std::vector<std::string>& w) {
    const std::string where = "line " + std::to_string(number);
    const auto need = [&](std::size_t count) {
      if (w.size() != count) throw InputError(where + ": '" + w[0] + "' takes " + std::to_string(count - 1) + " arguments");
    };
    const auto ident = [&](const std::string& id) {
      if (!valid_ident(id)) throw InputError(where + ": invalid identifier '" + id + "'");
      return id;
    };
    if (w[0] == "state") {
      need(3);
      if (w[2] != "1" && w[2] != "2") throw InputError(where + ": owner must be 1 or 2");
      d.states.push_back({ident(w[1]), w[2] == "1" ? Player::P1 : Player::P2});
    } else if (w[0] == "edge") {
      need(4);
      d.edges.push_back({ident(w[1]), ident(w[2]), parse_int(w[3], where)});
    } else if (w[0] == "init") {
      need(2);
      if (has_init) throw InputError(where + ": duplicate init");
      d.init = ident(w[1]);
      has_init = true;
    } else {
      throw InputError(where + ": unknown directive '" + w[0] + "'");
    }
  });
  return GameGraph::build(d);
}

std::string serialize_game(const GameGraph& game) {
  std::vector<StateIndex> order(game.size());
  for (StateIndex s = 0; s < game.size(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&](StateIndex a, StateIndex b) { return game.name(a) < game.name(b); });

  std::ostringstream out;
  for (StateIndex s : order) out << "state " << game.name(s) << ' ' << (game.owner(s) == Player::P1 ? 1 : 2) << '\n';
  for (StateIndex s : order) {
    std::vector<Arc> arcs(game.out(s).begin(), game.out(s).end());
    std::sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) { return game.name(a.dst) < game.name(b.dst); });
    for (const Arc& a : arcs) out << "edge " << game.name(s) << ' ' << game.name(a.dst) << ' ' << a.weight << '\n';
  }
  out << "init " << game.name(game.init()) << '\n';
  return out.str();
}

Lasso parse_lasso(const GameGraph& game, std::string_view text) {
  const auto words = split_words(text);
  const auto open = std::find(words.begin(), words.end(), "(");
  if (open == words.end() || words.back() != ")" || std::count(words.begin(), words.end(), "(") != 1 ||
      std::count(words.begin(), words.end(), ")") != 1) {
    throw InputError("lasso must look like 's0 s1 ( c0 c1 )'");
  }
  Lasso l;
  for (auto it = words.begin(); it != open; ++it) l.prefix.push_back(game.at(*it));
  for (auto it = open + 1; it + 1 != words.end(); ++it) l.cycle.push_back(game.at(*it));
  if (l.cycle.empty()) throw InputError("lasso cycle is empty");
  check_lasso(game, l);
  return l;
}

std::string format_lasso(const GameGraph& game, const Lasso& lasso) {
  std::string out;
  for (StateIndex s : lasso.prefix) out += game.name(s) + ' ';
  out += "(";
  for (StateIndex s : lasso.cycle) out += ' ' + game.name(s);
  return out + " )";
}

MooreStrategy parse_strategy(const GameGraph& game, std::string_view text, Player owner) {
  std::optional<std::string> initial;
  struct Line {
    std::string where, mem, next;
    StateIndex state, succ;
  };
  std::vector<Line> lines;
  std::vector<std::string> labels;
  const auto note_label = [&](const std::string& m) {
    if (std::find(labels.begin(), labels.end(), m) == labels.end()) labels.push_back(m);
  };

  for_each_line(text, [&](std::size_t number, const std::vector<std::string>& w) {
    const std::string where = "line " + std::to_string(number);
    if (w[0] == "memory-init") {
      if (w.size() != 2) throw InputError(where + ": 'memory-init' takes 1 argument");
      if (initial) throw InputError(where + ": duplicate memory-init");
      initial = w[1];
      note_label(w[1]);
    } else if (w[0] == "at") {
      if (w.size() != 6 || w[3] != "->") throw InputError(where + ": expected 'at <mem> <state> -> <successor> <next-mem>'");
      lines.push_back({where, w[1], w[5], game.at(w[2]), game.at(w[4])});
      note_label(w[1]);
      note_label(w[5]);
    } else {
      throw InputError(where + ": unknown directive '" + w[0] + "'");
    }
  });
  if (!initial) throw InputError("strategy has no memory-init line");

  const auto index_of = [&](const std::string& m) {
    return static_cast<MooreStrategy::Memory>(std::find(labels.begin(), labels.end(), m) - labels.begin());
  };
  MooreStrategy strat(owner, labels, index_of(*initial));
  for (const auto& l : lines) {
    if (!game.has_edge(l.state, l.succ)) {
      throw InputError(l.where + ": no edge " + game.name(l.state) + " -> " + game.name(l.succ));
    }
    const auto m = index_of(l.mem);
    if (game.owner(l.state) == owner) {
      if (auto prev = strat.output(m, l.state); prev && *prev != l.succ) {
        throw InputError(l.where + ": conflicting decision at (" + l.mem + ", " + game.name(l.state) + ")");
      }
      strat.set_output(m, l.state, l.succ);
    }
    strat.set_update(m, l.state, l.succ, index_of(l.next));
  }
  return strat;
}

std::string serialize_strategy(const GameGraph& game, const Strategy& strategy) {
  const MooreStrategy m = std::holds_alternative<MooreStrategy>(strategy)
                              ? std::get<MooreStrategy>(strategy)
                              : as_moore(game, std::get<MemorylessStrategy>(strategy));
  std::set<std::tuple<MooreStrategy::Memory, StateIndex, StateIndex>> lines;
  for (const auto& [key, succ] : m.outputs()) lines.emplace(key.first, key.second, succ);
  for (const auto& [key, next] : m.updates()) lines.insert(key);

  std::vector<std::string> rows;
  for (const auto& [mem, s, succ] : lines) {
    rows.push_back("at " + m.label(mem) + ' ' + game.name(s) + " -> " + game.name(succ) + ' ' +
                   m.label(m.next(mem, s, succ)));
  }
  std::sort(rows.begin(), rows.end());
  std::string out = "memory-init " + m.label(m.initial()) + '\n';
  for (const auto& r : rows) out += r + '\n';
  return out;
}

std::string trace_csv(const GameGraph& game, const Strategy& p1, const Strategy& p2, std::size_t steps) {
  const std::vector<StateIndex> play = outcome(game, p1, p2, steps);
  std::ostringstream out;
  out << "step,state,energy\n";
  std::int64_t energy = 0;
  for (std::size_t i = 0; i < play.size(); ++i) {
    if (i > 0) energy += *game.weight(play[i - 1], play[i]);
    out << i << ',' << game.name(play[i]) << ',' << energy << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace aeg
