#include "detail/leaf_lca.hpp"

namespace bmg::detail {

LeafLcaTable::LeafLcaTable(const LeafColoredTree& tree)
    : n_(tree.leaf_count()), table_(n_ * n_, kNoNode) {
  std::vector<std::vector<int>> below(tree.size());
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId u = *it;
    if (tree.is_leaf(u)) {
      const int r = tree.rank(u);
      below[u] = {r};
      table_[r * n_ + r] = u;
      continue;
    }
    std::vector<int> acc;
    for (NodeId c : tree.children(u)) {
      for (int a : acc)
        for (int b : below[c]) {
          table_[a * n_ + b] = u;
          table_[b * n_ + a] = u;
        }
      acc.insert(acc.end(), below[c].begin(), below[c].end());
      std::vector<int>().swap(below[c]);
    }
    below[u] = std::move(acc);
  }
}

}  // namespace bmg::detail
