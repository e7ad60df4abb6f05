#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmg/graph.hpp"
#include "bmg/tree.hpp"
#include "bmg/triples.hpp"

namespace bmg {

/// Undirected graph on a leaf set with an edge xy for every triple xy|z
/// inside the set.
struct AhoGraph {
  std::vector<std::string> vertices;        // sorted
  std::vector<std::pair<int, int>> edges;   // u < v, sorted, unique

  /// Components as sorted vertex index lists, ordered by smallest member.
  std::vector<std::vector<int>> components() const;
  bool connected() const { return components().size() <= 1; }
};

AhoGraph aho_graph(const TripleSet& ts, std::span<const std::string> leaves);

/// Either the Aho tree or the first leaf subset (|L'| > 1, sorted) whose
/// Aho graph was connected.
struct BuildOutcome {
  std::optional<LeafColoredTree> tree;
  std::vector<std::string> certificate;

  bool ok() const noexcept { return tree.has_value(); }
};

/// BUILD over `leaves` (triples with a leaf outside are ignored). Subsets are
/// recursed in order of their smallest leaf, so the certificate is
/// deterministic.
BuildOutcome build(const TripleSet& ts, std::span<const std::string> leaves);
BuildOutcome build(const TripleSet& ts);

/// BUILD on R(G) (`rbin` false) or Rbin(G) (`rbin` true) without
/// materializing the triples: each level derives the Aho graph from color
/// counts and out-neighborhoods. Same tree and certificate as build() on the
/// explicit set; leaves carry the graph's colors. InputError on improper
/// colorings.
BuildOutcome build_from_graph(const ColoredDigraph& g, bool rbin);

/// Least resolved tree. NotExplainableError("not-a-bmg") when R is
/// inconsistent or its Aho tree does not explain g.
LeafColoredTree lrt(const ColoredDigraph& g);

/// Binary-refinable tree. NotExplainableError("not-sf") or
/// NotExplainableError("rbin-inconsistent", L').
LeafColoredTree brt(const ColoredDigraph& g);

enum class Rejection { kNone, kNotSf, kRbinInconsistent, kNotBmg };
std::string_view to_string(Rejection r);

struct Explanation {
  std::optional<LeafColoredTree> tree;
  Rejection rejection = Rejection::kNone;
  std::vector<std::string> certificate;

  bool ok() const noexcept { return tree.has_value(); }
};

/// Binary tree explaining g, or the reason none exists.
Explanation binary_explaining_tree(const ColoredDigraph& g);

}  // namespace bmg
