#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bmg {

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

enum class Event : std::uint8_t {
  kNone,
  kSpeciation,
  kDuplication,
  kTransfer,
  kLoss,
  kLeaf,
};

std::string_view to_string(Event event);

struct TreeNode {
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
  std::string label;  // leaves only
  std::string color;  // leaves only; empty means uncolored
  std::optional<double> time;
  Event event = Event::kNone;
};

/// Unvalidated rooted tree used as a staging area while building or editing.
/// Unary vertices are allowed here; `suppress_unary` turns it into a
/// phylogenetic tree.
struct RawTree {
  std::vector<TreeNode> nodes;
  NodeId root = kNoNode;

  NodeId add_leaf(std::string label, std::string color = {});
  NodeId add_inner(std::vector<NodeId> children);
};

/// Rooted phylogenetic tree with colored leaves. Immutable once built.
///
/// Children of every vertex are stored sorted by the lexicographically
/// smallest leaf label below them, so iteration order, Newick output and
/// every "arbitrary" choice made by the algorithms are reproducible.
/// Leaves are ranked by label; rank r is the r-th smallest label and is the
/// index used for the same vertex in graphs and triple sets built from this
/// tree.
class LeafColoredTree {
 public:
  /// Validates and canonicalizes. A root with a single child is accepted only
  /// when `planted` is set.
  explicit LeafColoredTree(RawTree raw, bool planted = false);

  NodeId root() const noexcept { return root_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool planted() const noexcept { return planted_; }

  const TreeNode& node(NodeId v) const { return nodes_.at(v); }
  NodeId parent(NodeId v) const { return nodes_[v].parent; }
  const std::vector<NodeId>& children(NodeId v) const {
    return nodes_[v].children;
  }
  bool is_leaf(NodeId v) const { return nodes_[v].children.empty(); }
  int depth(NodeId v) const { return depth_[v]; }

  /// Leaf nodes in rank order.
  const std::vector<NodeId>& leaves() const noexcept { return leaves_; }
  std::size_t leaf_count() const noexcept { return leaves_.size(); }
  std::vector<std::string> leaf_labels() const;
  const std::string& label(NodeId v) const { return nodes_[v].label; }
  const std::string& color(NodeId v) const { return nodes_[v].color; }
  /// Rank of a leaf node, -1 for inner nodes.
  int rank(NodeId v) const { return rank_[v]; }

  std::optional<NodeId> find_leaf(std::string_view label) const;
  /// Throws InputError for an unknown label.
  NodeId leaf(std::string_view label) const;

  bool has_colors() const;
  bool is_binary() const;
  bool has_times() const;

  /// Sorted leaf ranks below `v`.
  std::vector<int> cluster(NodeId v) const;
  /// Clusters of all vertices, each sorted, the whole list sorted.
  std::vector<std::vector<int>> clusters() const;

  NodeId lca(NodeId u, NodeId v) const;

  /// All vertices in pre-order (root first, children in canonical order).
  std::vector<NodeId> preorder() const;

  RawTree to_raw() const;

  /// Topology and leaf coloring agree; times and events are ignored.
  friend bool operator==(const LeafColoredTree& a, const LeafColoredTree& b);

 private:
  std::vector<TreeNode> nodes_;
  NodeId root_ = kNoNode;
  bool planted_ = false;
  std::vector<NodeId> leaves_;
  std::vector<int> rank_;
  std::vector<int> depth_;
  std::vector<int> min_rank_;
};

/// Same leaf-labelled topology, colors ignored.
bool same_topology(const LeafColoredTree& a, const LeafColoredTree& b);

/// Least common ancestor of a nonempty set of leaves.
NodeId lca(const LeafColoredTree& tree, std::span<const std::string> leaves);

/// Whether the tree displays the triple ab|c.
bool displays(const LeafColoredTree& tree, std::string_view a,
              std::string_view b, std::string_view c);

/// Whether `fine` is a refinement of `coarse` (same leaf set, every cluster
/// of `coarse` is a cluster of `fine`). The cluster test and the triple
/// test are both run and must agree.
bool is_refinement(const LeafColoredTree& fine, const LeafColoredTree& coarse);

/// Resolves each multifurcation into a caterpillar over its children in
/// canonical order: (((c1,c2),c3),...).
LeafColoredTree binary_refine(const LeafColoredTree& tree);

/// (|V| - |L| - 1) / (|L| - 2); InputError for |L| <= 2 or planted trees.
double resolution(const LeafColoredTree& tree);

/// Contracts the edges above the listed inner vertices.
LeafColoredTree contract_edges(const LeafColoredTree& tree,
                               std::span<const NodeId> lower_ends);

/// Removes vertices with exactly one child; a unary root is replaced by its
/// child. Leaves with no label are rejected.
LeafColoredTree suppress_unary(const RawTree& raw);

/// Star tree on the given leaves, optionally colored.
LeafColoredTree star_tree(std::span<const std::string> labels,
                          std::span<const std::string> colors = {});

}  // namespace bmg
