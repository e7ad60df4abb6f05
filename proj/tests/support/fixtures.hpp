#pragma once

#include <random>
#include <string>
#include <vector>

#include "bmg/graph.hpp"
#include "bmg/newick.hpp"
#include "bmg/tree.hpp"

namespace fixtures {

inline bmg::LeafColoredTree colored(const std::string& newick) {
  auto t = bmg::parse_newick(newick);
  bmg::ColorMap colors;
  // Color = leading letters of the label, uppercased: a1 -> A, x2 -> X.
  for (const auto& l : t.leaf_labels()) {
    std::string c;
    for (char ch : l) {
      if (!std::isalpha(static_cast<unsigned char>(ch))) break;
      c += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    colors[l] = c;
  }
  return bmg::with_colors(t, colors);
}

inline bmg::ColoredDigraph graph(std::vector<bmg::Vertex> vs, std::vector<bmg::Arc> arcs) {
  return bmg::ColoredDigraph(std::move(vs), std::span<const bmg::Arc>(arcs));
}

/// x1 = x, x2 = x', y1 = y, y2 = y'.
inline bmg::ColoredDigraph hourglass() {
  return graph({{"x1", "X"}, {"x2", "X"}, {"y1", "Y"}, {"y2", "Y"}},
               {{"x1", "y1"}, {"y1", "x1"}, {"x2", "y2"}, {"y2", "x2"}, {"x1", "y2"}, {"y1", "x2"}});
}

inline bmg::ColoredDigraph twin_cherry() {
  return graph({{"a1", "A"}, {"a2", "A"}, {"b1", "B"}, {"b2", "B"}},
               {{"a1", "b1"}, {"b1", "a1"}, {"a2", "b2"}, {"b2", "a2"}});
}

inline bmg::ColoredDigraph rainbow_triangle() {
  return graph({{"a", "A"}, {"b", "B"}, {"c", "C"}},
               {{"a", "b"}, {"b", "a"}, {"a", "c"}, {"c", "a"}, {"b", "c"}, {"c", "b"}});
}

inline bmg::ColoredDigraph biclique() {
  return graph({{"x1", "X"}, {"x2", "X"}, {"y1", "Y"}, {"y2", "Y"}},
               {{"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}, {"x2", "y2"},
                {"y1", "x1"}, {"y1", "x2"}, {"y2", "x1"}, {"y2", "x2"}});
}

/// Random phylogenetic tree on leaves l0..l{n-1}. With `binary` every inner
/// vertex has two children; otherwise random merges of 2 or 3 subtrees.
inline bmg::LeafColoredTree random_tree(std::mt19937_64& rng, int n, int colors, bool binary) {
  bmg::RawTree raw;
  std::vector<bmg::NodeId> pool;
  std::uniform_int_distribution<int> color(0, colors - 1);
  for (int i = 0; i < n; ++i) {
    std::string label = "l" + std::string(i < 10 ? "0" : "") + std::to_string(i);
    pool.push_back(raw.add_leaf(label, std::string(1, static_cast<char>('A' + color(rng)))));
  }
  while (pool.size() > 1) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t k = 2;
    if (!binary && pool.size() >= 3 && std::uniform_int_distribution<int>(0, 2)(rng) == 0) k = 3;
    std::vector<bmg::NodeId> kids(pool.end() - static_cast<long>(k), pool.end());
    pool.resize(pool.size() - k);
    pool.push_back(raw.add_inner(std::move(kids)));
  }
  raw.root = pool.front();
  return bmg::LeafColoredTree(std::move(raw));
}

/// Random properly colored digraph: colors assigned at random, each
/// bichromatic ordered pair an arc with probability p.
inline bmg::ColoredDigraph random_graph(std::mt19937_64& rng, int n, int colors, double p) {
  std::vector<bmg::Vertex> vs;
  std::uniform_int_distribution<int> color(0, colors - 1);
  for (int i = 0; i < n; ++i)
    vs.push_back({"v" + std::to_string(i), std::string(1, static_cast<char>('A' + color(rng)))});
  std::vector<std::pair<int, int>> arcs;
  std::bernoulli_distribution arc(p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && vs[i].color != vs[j].color && arc(rng)) arcs.emplace_back(i, j);
  return bmg::ColoredDigraph(std::move(vs), std::span<const std::pair<int, int>>(arcs));
}

}  // namespace fixtures
