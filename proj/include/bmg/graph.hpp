#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmg/newick.hpp"
#include "bmg/tree.hpp"
#include "bmg/triples.hpp"

namespace bmg {

struct Vertex {
  std::string id;
  std::string color;
};

using Arc = std::pair<std::string, std::string>;

/// Vertex-colored digraph without self-loops. Vertices are indexed by the
/// rank of their id, so index i here is leaf rank i of a tree on the same
/// labels. Out-neighborhoods are sorted.
class ColoredDigraph {
 public:
  ColoredDigraph() = default;
  ColoredDigraph(std::vector<Vertex> vertices, std::span<const Arc> arcs);
  /// Arcs given as positions into `vertices` (before sorting).
  ColoredDigraph(std::vector<Vertex> vertices, std::span<const std::pair<int, int>> arcs);

  int size() const noexcept { return static_cast<int>(ids_.size()); }
  const std::string& id(int v) const { return ids_[v]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& color(int v) const { return colors_[color_of_[v]]; }
  /// Index into colors() of the color of `v`.
  int color_index(int v) const { return color_of_[v]; }
  /// Distinct colors, sorted.
  const std::vector<std::string>& colors() const noexcept { return colors_; }
  int color_count() const noexcept { return static_cast<int>(colors_.size()); }

  /// -1 when absent.
  int index_of(std::string_view id) const;
  /// Throws InputError when absent.
  int vertex(std::string_view id) const;

  const std::vector<int>& out(int v) const { return out_[v]; }
  bool has_arc(int u, int v) const { return adj_[static_cast<std::size_t>(u) * ids_.size() + v] != 0; }
  std::size_t arc_count() const noexcept { return arc_count_; }
  /// All arcs in lexicographic order of (source id, target id).
  std::vector<Arc> arcs() const;
  std::vector<std::pair<int, int>> arc_indices() const;

  bool is_properly_colored() const;

  friend bool operator==(const ColoredDigraph& a, const ColoredDigraph& b);

 private:
  void init(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> arcs);

  std::vector<std::string> ids_;
  std::vector<std::string> colors_;
  std::vector<int> color_of_;
  std::vector<std::vector<int>> out_;
  std::vector<char> adj_;
  std::size_t arc_count_ = 0;
};

/// The graph of best matches of a colored tree.
ColoredDigraph bmg_from_tree(const LeafColoredTree& tree);

/// Properly colored and every vertex has an out-neighbor of every other color.
bool is_sf_colored(const ColoredDigraph& g);

/// Triple sets over the vertex ids. InputError on improper colorings.
TripleSet informative_triples(const ColoredDigraph& g);
TripleSet forbidden_triples(const ColoredDigraph& g);
TripleSet rbin_triples(const ColoredDigraph& g);

ColoredDigraph induced_subgraph(const ColoredDigraph& g, std::span<const std::string> keep);
ColoredDigraph induced_subgraph(const ColoredDigraph& g, std::span<const int> keep);

/// Canonical graph JSON (vertices sorted by id, arcs lexicographic).
std::string to_json(const ColoredDigraph& g, int indent = -1);
ColoredDigraph graph_from_json(std::string_view text);
/// `src<TAB>dst` rows plus a color map covering every vertex. Vertices are
/// the keys of `colors`.
ColoredDigraph graph_from_tsv(std::string_view arcs_tsv, const ColorMap& colors);

}  // namespace bmg
