#pragma once

#include "bmg/graph.hpp"

namespace oracle {

/// Best matches straight from the definition: all ordered pairs, comparing
/// the lca depth of y against every leaf of y's color.
inline bmg::ColoredDigraph bmg_by_definition(const bmg::LeafColoredTree& t) {
  const auto& leaves = t.leaves();
  std::vector<bmg::Vertex> vs;
  for (auto v : leaves) vs.push_back({t.label(v), t.color(v)});
  std::vector<std::pair<int, int>> arcs;
  const int n = static_cast<int>(leaves.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (vs[x].color == vs[y].color) continue;
      const auto l = t.lca(leaves[x], leaves[y]);
      bool best = true;
      for (int z = 0; z < n && best; ++z)
        if (vs[z].color == vs[y].color && t.depth(t.lca(leaves[x], leaves[z])) > t.depth(l)) best = false;
      if (best) arcs.emplace_back(x, y);
    }
  return bmg::ColoredDigraph(std::move(vs), std::span<const std::pair<int, int>>(arcs));
}

}  // namespace oracle
