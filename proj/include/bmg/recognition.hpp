#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmg/graph.hpp"
#include "bmg/tree.hpp"

namespace bmg {

enum class WitnessKind { kHourglass, kF1, kF2, kF3, kTreeCondition };
std::string_view to_string(WitnessKind k);

/// Graph witnesses list vertex ids in role order:
///   hourglass (x, y, x', y'); F1/F2 (x1, x2, y1, y2); F3 (x1, x2, y1, y2, y3).
/// Tree witnesses fill node/children/r/s instead.
struct ForbiddenWitness {
  WitnessKind kind = WitnessKind::kHourglass;
  std::vector<std::string> vertices;
  NodeId node = kNoNode;
  std::array<NodeId, 3> children{kNoNode, kNoNode, kNoNode};
  std::string r, s;
};

struct Recognition {
  bool bmg = false;
  std::optional<LeafColoredTree> lrt;
  /// Subset with a connected Aho graph when R is inconsistent.
  std::vector<std::string> certificate;
};

/// Properly colored, R consistent and the Aho tree of R explains g.
Recognition recognize(const ColoredDigraph& g);
bool is_bmg(const ColoredDigraph& g);

/// Lexicographically first (x, y, x', y') by vertex rank. InputError on
/// improper colorings.
std::optional<ForbiddenWitness> find_hourglass(const ColoredDigraph& g);

/// Defined for BMGs only; InputError otherwise.
bool is_binary_explainable_via_hourglass(const ColoredDigraph& g);

/// First F1, then F2, then F3 witness, each lexicographically first in role
/// order. InputError for improper colorings or more than two colors.
std::optional<ForbiddenWitness> find_f_graph(const ColoredDigraph& g);

/// Vertex u with children v1, v2, v3 and colors r != s such that r occurs
/// below v1 and v2, s below v2 and v3, s not below v1 and r not below v3.
/// First in pre-order, then by child position, then by color.
std::optional<ForbiddenWitness> tree_binary_condition(const LeafColoredTree& tree);

/// Re-check a witness against its definition.
bool verify_witness(const ColoredDigraph& g, const ForbiddenWitness& w);
bool verify_witness(const LeafColoredTree& tree, const ForbiddenWitness& w);

}  // namespace bmg
