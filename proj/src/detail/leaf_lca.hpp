#pragma once

#include <vector>

#include "bmg/tree.hpp"

namespace bmg::detail {

/// All-pairs leaf lca table indexed by leaf rank. O(|L|^2) memory.
class LeafLcaTable {
 public:
  explicit LeafLcaTable(const LeafColoredTree& tree);

  NodeId lca(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Rank of the outgroup of the triple displayed on {i, j, k}, or -1 when
  /// the tree resolves none of the three.
  int outgroup(int i, int j, int k) const {
    const NodeId ij = lca(i, j), ik = lca(i, k), jk = lca(j, k);
    if (ik == jk && ij != ik) return k;
    if (ij == jk && ik != ij) return j;
    if (ij == ik && jk != ij) return i;
    return -1;
  }

 private:
  std::size_t n_;
  std::vector<NodeId> table_;
};

}  // namespace bmg::detail
