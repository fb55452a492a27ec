#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "aeg/game.hpp"
#include "aeg/kernels.hpp"

namespace aeg::detail {

/// Out-edge matrix over all states: row v ranges over the arcs of v, with
/// weights scaled by `sign`. Short rows repeat their first arc.
inline kernels::EllMatrix out_edge_matrix(const GameGraph& game, std::int64_t sign,
                                          const std::vector<std::uint8_t>& maximize) {
  kernels::EllMatrix m;
  m.rows = game.size();
  m.sources = game.size();
  for (StateIndex v = 0; v < game.size(); ++v) m.width = std::max(m.width, game.out_degree(v));
  m.index.assign(m.width * m.rows, 0);
  m.weight.assign(m.width * m.rows, 0);
  m.maximize = maximize;
  for (StateIndex v = 0; v < game.size(); ++v) {
    const auto arcs = game.out(v);
    for (std::size_t d = 0; d < m.width; ++d) {
      const Arc& a = arcs[d < arcs.size() ? d : 0];
      m.index[d * m.rows + v] = a.dst;
      m.weight[d * m.rows + v] = sign * a.weight;
    }
  }
  return m;
}

/// In-edge matrix of the subgraph induced by `members` (local indices follow
/// the order of `members`). Rows without in-edges read the kInf sentinel.
inline kernels::EllMatrix in_edge_matrix(const GameGraph& game, const std::vector<StateIndex>& members,
                                         const std::vector<std::uint32_t>& local, std::int64_t sign) {
  const std::size_t k = members.size();
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> in(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const Arc& a : game.out(members[i])) {
      if (local[a.dst] != UINT32_MAX) in[local[a.dst]].emplace_back(static_cast<std::uint32_t>(i), sign * a.weight);
    }
  }
  kernels::EllMatrix m;
  m.rows = k;
  m.sources = k;
  m.width = 1;
  for (const auto& row : in) m.width = std::max(m.width, row.size());
  m.index.assign(m.width * k, static_cast<std::uint32_t>(k));
  m.weight.assign(m.width * k, 0);
  m.maximize.assign(k, 0);
  for (std::size_t v = 0; v < k; ++v) {
    for (std::size_t d = 0; d < m.width && !in[v].empty(); ++d) {
      const auto& [src, w] = in[v][d < in[v].size() ? d : 0];
      m.index[d * k + v] = src;
      m.weight[d * k + v] = w;
    }
  }
  return m;
}

}  // namespace aeg::detail
