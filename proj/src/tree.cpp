#include "bmg/tree.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <unordered_set>

#include "bmg/error.hpp"
#include "detail/leaf_lca.hpp"

namespace bmg {

std::string_view to_string(Event event) {
  switch (event) {
    case Event::kNone: return "none";
    case Event::kSpeciation: return "speciation";
    case Event::kDuplication: return "duplication";
    case Event::kTransfer: return "hgt";
    case Event::kLoss: return "loss";
    case Event::kLeaf: return "leaf";
  }
  return "none";
}

NodeId RawTree::add_leaf(std::string label, std::string color) {
  TreeNode n;
  n.label = std::move(label);
  n.color = std::move(color);
  nodes.push_back(std::move(n));
  return static_cast<NodeId>(nodes.size() - 1);
}

NodeId RawTree::add_inner(std::vector<NodeId> children) {
  const auto id = static_cast<NodeId>(nodes.size());
  for (NodeId c : children) nodes.at(c).parent = id;
  TreeNode n;
  n.children = std::move(children);
  nodes.push_back(std::move(n));
  return id;
}

LeafColoredTree::LeafColoredTree(RawTree raw, bool planted)
    : nodes_(std::move(raw.nodes)), root_(raw.root), planted_(planted) {
  const auto n = static_cast<NodeId>(nodes_.size());
  if (root_ < 0 || root_ >= n) throw InputError("tree: root out of range");
  if (nodes_[root_].parent != kNoNode) throw InputError("tree: root has a parent");

  // Reachability from the root doubles as the cycle and connectivity test.
  std::vector<char> seen(n, 0);
  std::vector<NodeId> order;
  order.reserve(n);
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (seen[u]) throw InputError("tree: vertex reached twice");
    seen[u] = 1;
    order.push_back(u);
    for (NodeId c : nodes_[u].children) {
      if (c < 0 || c >= n) throw InputError("tree: child out of range");
      if (nodes_[c].parent != u) throw InputError("tree: inconsistent parent pointer");
      stack.push_back(c);
    }
  }
  if (static_cast<NodeId>(order.size()) != n) throw InputError("tree: disconnected vertices");

  for (NodeId u = 0; u < n; ++u) {
    const auto k = nodes_[u].children.size();
    if (k == 1 && !(planted_ && u == root_))
      throw InputError("tree: inner vertex with a single child");
    if (u == root_ && planted_ && k != 1 && n > 1)
      throw InputError("tree: planted root must have exactly one child");
    if (k == 0) {
      if (nodes_[u].label.empty()) throw InputError("tree: unlabelled leaf");
      leaves_.push_back(u);
    }
    const auto& t = nodes_[u].time;
    if (t && u != root_) {
      const auto& pt = nodes_[nodes_[u].parent].time;
      if (pt && !(*t < *pt)) throw InputError("tree: time stamps must decrease towards the leaves");
    }
  }

  std::sort(leaves_.begin(), leaves_.end(), [&](NodeId a, NodeId b) {
    return nodes_[a].label < nodes_[b].label;
  });
  for (std::size_t i = 1; i < leaves_.size(); ++i)
    if (nodes_[leaves_[i]].label == nodes_[leaves_[i - 1]].label)
      throw InputError("tree: duplicate leaf label '" + nodes_[leaves_[i]].label + "'");

  rank_.assign(n, -1);
  for (std::size_t i = 0; i < leaves_.size(); ++i) rank_[leaves_[i]] = static_cast<int>(i);

  min_rank_.assign(n, std::numeric_limits<int>::max());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId u = *it;
    auto& ch = nodes_[u].children;
    if (ch.empty()) {
      min_rank_[u] = rank_[u];
      continue;
    }
    std::sort(ch.begin(), ch.end(), [&](NodeId a, NodeId b) { return min_rank_[a] < min_rank_[b]; });
    min_rank_[u] = min_rank_[ch.front()];
  }

  depth_.assign(n, 0);
  for (NodeId u : order)
    if (u != root_) depth_[u] = depth_[nodes_[u].parent] + 1;
}

std::vector<std::string> LeafColoredTree::leaf_labels() const {
  std::vector<std::string> out;
  out.reserve(leaves_.size());
  for (NodeId v : leaves_) out.push_back(nodes_[v].label);
  return out;
}

std::optional<NodeId> LeafColoredTree::find_leaf(std::string_view label) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), label,
                             [&](NodeId v, std::string_view l) { return nodes_[v].label < l; });
  if (it == leaves_.end() || nodes_[*it].label != label) return std::nullopt;
  return *it;
}

NodeId LeafColoredTree::leaf(std::string_view label) const {
  if (auto v = find_leaf(label)) return *v;
  throw InputError("unknown leaf '" + std::string(label) + "'");
}

bool LeafColoredTree::has_colors() const {
  return std::all_of(leaves_.begin(), leaves_.end(),
                     [&](NodeId v) { return !nodes_[v].color.empty(); });
}

bool LeafColoredTree::is_binary() const {
  for (NodeId u = 0; u < static_cast<NodeId>(nodes_.size()); ++u) {
    const auto k = nodes_[u].children.size();
    if (k > 2) return false;
  }
  return true;
}

bool LeafColoredTree::has_times() const {
  return std::all_of(nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return n.time.has_value(); });
}

std::vector<int> LeafColoredTree::cluster(NodeId v) const {
  std::vector<int> out;
  std::vector<NodeId> stack{v};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (is_leaf(u)) out.push_back(rank_[u]);
    for (NodeId c : nodes_[u].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> LeafColoredTree::clusters() const {
  std::vector<std::vector<int>> out;
  out.reserve(nodes_.size());
  for (NodeId u = 0; u < static_cast<NodeId>(nodes_.size()); ++u) out.push_back(cluster(u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NodeId LeafColoredTree::lca(NodeId u, NodeId v) const {
  while (depth_[u] > depth_[v]) u = nodes_[u].parent;
  while (depth_[v] > depth_[u]) v = nodes_[v].parent;
  while (u != v) {
    u = nodes_[u].parent;
    v = nodes_[v].parent;
  }
  return u;
}

std::vector<NodeId> LeafColoredTree::preorder() const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    out.push_back(u);
    const auto& ch = nodes_[u].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

RawTree LeafColoredTree::to_raw() const { return RawTree{nodes_, root_}; }

namespace {

bool equal_below(const LeafColoredTree& a, NodeId u, const LeafColoredTree& b, NodeId v,
                 bool with_colors) {
  if (a.is_leaf(u) != b.is_leaf(v)) return false;
  if (a.is_leaf(u)) return a.label(u) == b.label(v) && (!with_colors || a.color(u) == b.color(v));
  const auto& cu = a.children(u);
  const auto& cv = b.children(v);
  if (cu.size() != cv.size()) return false;
  for (std::size_t i = 0; i < cu.size(); ++i)
    if (!equal_below(a, cu[i], b, cv[i], with_colors)) return false;
  return true;
}

bool equal_trees(const LeafColoredTree& a, const LeafColoredTree& b, bool with_colors) {
  if (a.leaf_count() != b.leaf_count()) return false;
  for (std::size_t i = 0; i < a.leaf_count(); ++i)
    if (a.label(a.leaves()[i]) != b.label(b.leaves()[i])) return false;
  return equal_below(a, a.root(), b, b.root(), with_colors);
}

}  // namespace

bool operator==(const LeafColoredTree& a, const LeafColoredTree& b) {
  return equal_trees(a, b, true);
}

bool same_topology(const LeafColoredTree& a, const LeafColoredTree& b) {
  return equal_trees(a, b, false);
}

NodeId lca(const LeafColoredTree& tree, std::span<const std::string> leaves) {
  if (leaves.empty()) throw InputError("lca: empty leaf set");
  NodeId acc = tree.leaf(leaves.front());
  for (std::size_t i = 1; i < leaves.size(); ++i) acc = tree.lca(acc, tree.leaf(leaves[i]));
  return acc;
}

bool displays(const LeafColoredTree& tree, std::string_view a, std::string_view b,
              std::string_view c) {
  const NodeId x = tree.leaf(a), y = tree.leaf(b), z = tree.leaf(c);
  if (x == y || x == z || y == z) throw InputError("displays: triple leaves must be distinct");
  const NodeId ab = tree.lca(x, y);
  const NodeId ac = tree.lca(x, z);
  return ab != ac && ac == tree.lca(y, z);
}

bool is_refinement(const LeafColoredTree& fine, const LeafColoredTree& coarse) {
  if (fine.leaf_labels() != coarse.leaf_labels()) return false;

  const auto fine_clusters = fine.clusters();
  const auto coarse_clusters = coarse.clusters();
  const bool by_clusters = std::includes(fine_clusters.begin(), fine_clusters.end(),
                                         coarse_clusters.begin(), coarse_clusters.end());

  const detail::LeafLcaTable lf(fine), lc(coarse);
  const int n = static_cast<int>(fine.leaf_count());
  bool by_triples = true;
  for (int i = 0; i < n && by_triples; ++i)
    for (int j = i + 1; j < n && by_triples; ++j)
      for (int k = j + 1; k < n; ++k) {
        const int out = lc.outgroup(i, j, k);
        if (out >= 0 && lf.outgroup(i, j, k) != out) {
          by_triples = false;
          break;
        }
      }

  if (by_clusters != by_triples)
    throw std::logic_error("is_refinement: cluster and triple criteria disagree");
  return by_clusters;
}

LeafColoredTree binary_refine(const LeafColoredTree& tree) {
  RawTree raw = tree.to_raw();
  const auto original = static_cast<NodeId>(raw.nodes.size());
  for (NodeId u = 0; u < original; ++u) {
    const std::vector<NodeId> ch = raw.nodes[u].children;  // canonical order
    if (ch.size() <= 2) continue;
    NodeId acc = raw.add_inner({ch[0], ch[1]});
    for (std::size_t i = 2; i + 1 < ch.size(); ++i) acc = raw.add_inner({acc, ch[i]});
    raw.nodes[acc].parent = u;
    raw.nodes[ch.back()].parent = u;
    raw.nodes[u].children = {acc, ch.back()};
  }
  return LeafColoredTree(std::move(raw), tree.planted());
}

double resolution(const LeafColoredTree& tree) {
  if (tree.planted()) throw InputError("resolution: planted trees are not supported");
  const auto leaves = static_cast<double>(tree.leaf_count());
  if (tree.leaf_count() <= 2) throw InputError("resolution: undefined for two or fewer leaves");
  return (static_cast<double>(tree.size()) - leaves - 1.0) / (leaves - 2.0);
}

LeafColoredTree contract_edges(const LeafColoredTree& tree, std::span<const NodeId> lower_ends) {
  std::vector<char> contract(tree.size(), 0);
  for (NodeId v : lower_ends) {
    if (v < 0 || v >= static_cast<NodeId>(tree.size())) throw InputError("contract: unknown vertex");
    if (v == tree.root()) throw InputError("contract: the root has no parent edge");
    if (tree.is_leaf(v)) throw InputError("contract: cannot contract a leaf edge");
    contract[v] = 1;
  }
  RawTree raw;
  std::function<NodeId(NodeId)> copy = [&](NodeId u) -> NodeId {
    const TreeNode& src = tree.node(u);
    if (src.children.empty()) {
      const NodeId id = raw.add_leaf(src.label, src.color);
      raw.nodes[id].time = src.time;
      raw.nodes[id].event = src.event;
      return id;
    }
    std::vector<NodeId> kids;
    std::vector<NodeId> pending(src.children.rbegin(), src.children.rend());
    while (!pending.empty()) {
      const NodeId c = pending.back();
      pending.pop_back();
      if (contract[c]) {
        const auto& cc = tree.children(c);
        for (auto it = cc.rbegin(); it != cc.rend(); ++it) pending.push_back(*it);
      } else {
        kids.push_back(copy(c));
      }
    }
    const NodeId id = raw.add_inner(std::move(kids));
    raw.nodes[id].time = src.time;
    raw.nodes[id].event = src.event;
    return id;
  };
  raw.root = copy(tree.root());
  const bool planted = tree.planted() && raw.nodes[raw.root].children.size() == 1;
  return LeafColoredTree(std::move(raw), planted);
}

LeafColoredTree suppress_unary(const RawTree& raw) {
  if (raw.root < 0 || raw.root >= static_cast<NodeId>(raw.nodes.size()))
    throw InputError("suppress_unary: root out of range");
  RawTree out;
  std::function<NodeId(NodeId, int)> copy = [&](NodeId u, int guard) -> NodeId {
    if (guard > static_cast<int>(raw.nodes.size())) throw InputError("suppress_unary: cycle detected");
    const TreeNode* src = &raw.nodes.at(u);
    while (src->children.size() == 1) {
      u = src->children.front();
      src = &raw.nodes.at(u);
    }
    if (src->children.empty()) {
      if (src->label.empty()) throw InputError("suppress_unary: unlabelled leaf");
      const NodeId id = out.add_leaf(src->label, src->color);
      out.nodes[id].time = src->time;
      out.nodes[id].event = src->event;
      return id;
    }
    std::vector<NodeId> kids;
    kids.reserve(src->children.size());
    for (NodeId c : src->children) kids.push_back(copy(c, guard + 1));
    const NodeId id = out.add_inner(std::move(kids));
    out.nodes[id].time = src->time;
    out.nodes[id].event = src->event;
    return id;
  };
  out.root = copy(raw.root, 0);
  return LeafColoredTree(std::move(out));
}

LeafColoredTree star_tree(std::span<const std::string> labels, std::span<const std::string> colors) {
  if (labels.empty()) throw InputError("star_tree: no leaves");
  if (!colors.empty() && colors.size() != labels.size())
    throw InputError("star_tree: color list length mismatch");
  RawTree raw;
  std::vector<NodeId> kids;
  for (std::size_t i = 0; i < labels.size(); ++i)
    kids.push_back(raw.add_leaf(labels[i], colors.empty() ? std::string{} : colors[i]));
  if (kids.size() == 1) {
    raw.root = kids.front();
  } else {
    raw.root = raw.add_inner(std::move(kids));
  }
  return LeafColoredTree(std::move(raw));
}

}  // namespace bmg
