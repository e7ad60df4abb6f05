#include "bmg/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "bmg/error.hpp"

namespace bmg {

namespace {

// 3 * C(8,3) = 168 triples fit in three words.
using Bits = std::array<std::uint64_t, 3>;

Bits operator|(const Bits& a, const Bits& b) { return {a[0] | b[0], a[1] | b[1], a[2] | b[2]}; }
bool subset(const Bits& a, const Bits& b) {
  return (a[0] & ~b[0]) == 0 && (a[1] & ~b[1]) == 0 && (a[2] & ~b[2]) == 0;
}
void set_bit(Bits& b, int i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& b, int i) { return (b[i / 64] >> (i % 64)) & 1u; }

class Enumerator {
 public:
  explicit Enumerator(int n) : n_(n), id_(static_cast<std::size_t>(n) * n * n, -1) {
    int next = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        for (int r = q + 1; r < n; ++r) {
          id_[key(p, q, r)] = next++;
          id_[key(p, r, q)] = next++;
          id_[key(q, r, p)] = next++;
        }
    triples_ = next;
    // Triples implied by each cluster: ab|c with a, b inside and c outside.
    cluster_bits_.assign(std::size_t{1} << n, Bits{});
    for (std::uint32_t m = 1; m < (1u << n); ++m)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if ((m >> a & 1u) && (m >> b & 1u) && !(m >> c & 1u)) set_bit(cluster_bits_[m], triple_id(a, b, c));
  }

  int triple_id(int a, int b, int c) const {
    if (a > b) std::swap(a, b);
    return id_[key(a, b, c)];
  }
  int triple_count() const { return triples_; }

  /// Calls f(clusters) with the non-root, non-trivial clusters of each tree.
  void run(const std::function<void(const std::vector<std::uint32_t>&)>& f) {
    clusters_.clear();
    if (n_ <= 2) {
      f(clusters_);
      return;
    }
    children((1u << n_) - 1, true, [&] { f(clusters_); });
  }

  Bits bits_of(const std::vector<std::uint32_t>& clusters) const {
    Bits b{};
    for (auto m : clusters) b = b | cluster_bits_[m];
    return b;
  }

 private:
  std::size_t key(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }

  // Partitions `rest` into blocks (the block holding the lowest element
  // first), enumerating a subtree for each block.
  void children(std::uint32_t rest, bool need_two, const std::function<void()>& k) {
    if (rest == 0) {
      k();
      return;
    }
    const std::uint32_t low = rest & (~rest + 1);
    const std::uint32_t others = rest ^ low;
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
      const std::uint32_t block = low | sub;
      if (!(need_two && block == rest)) subtree(block, [&] { children(rest ^ block, false, k); });
      if (sub == 0) break;
    }
  }

  void subtree(std::uint32_t mask, const std::function<void()>& k) {
    if (std::popcount(mask) == 1) {
      k();
      return;
    }
    clusters_.push_back(mask);
    children(mask, true, k);
    clusters_.pop_back();
  }

  int n_;
  int triples_ = 0;
  std::vector<int> id_;
  std::vector<Bits> cluster_bits_;
  std::vector<std::uint32_t> clusters_;
};

std::vector<std::string> sorted_unique(std::span<const std::string> leaves) {
  std::vector<std::string> out(leaves.begin(), leaves.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > kOracleMaxLeaves)
    throw InputError("oracle: at most " + std::to_string(kOracleMaxLeaves) + " leaves are supported");
  return out;
}

/// Triples of `ts` inside `labels` as a bitset.
Bits encode(const TripleSet& ts, const std::vector<std::string>& labels, const Enumerator& e) {
  std::vector<int> pos(ts.universe().size(), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int u = ts.index_of(labels[i]);
    if (u >= 0) pos[u] = static_cast<int>(i);
  }
  Bits b{};
  for (const auto& t : ts.triples())
    if (pos[t.a] >= 0 && pos[t.b] >= 0 && pos[t.c] >= 0) set_bit(b, e.triple_id(pos[t.a], pos[t.b], pos[t.c]));
  return b;
}

LeafColoredTree materialize(const std::vector<std::uint32_t>& clusters,
                            const std::vector<std::string>& labels) {
  // Parent of each cluster is the smallest strict superset; leaves hang
  // below the smallest cluster containing them.
  auto order = clusters;
  std::sort(order.begin(), order.end(),
            [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  const int n = static_cast<int>(labels.size());
  const std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1;
  order.push_back(full);
  RawTree raw;
  std::vector<NodeId> leaf(n);
  for (int i = 0; i < n; ++i) leaf[i] = raw.add_leaf(labels[i]);
  std::vector<NodeId> node(order.size(), kNoNode);
  std::vector<std::vector<NodeId>> kids(order.size());
  for (int i = 0; i < n; ++i)
    for (std::size_t c = 0; c < order.size(); ++c)
      if (order[c] >> i & 1u) {
        kids[c].push_back(leaf[i]);
        break;
      }
  for (std::size_t c = 0; c < order.size(); ++c) {
    node[c] = raw.add_inner(std::move(kids[c]));
    for (std::size_t d = c + 1; d < order.size(); ++d)
      if ((order[c] & order[d]) == order[c]) {
        kids[d].push_back(node[c]);
        break;
      }
  }
  raw.root = node.back();
  return LeafColoredTree(std::move(raw));
}

}  // namespace

void for_each_tree(std::span<const std::string> leaves,
                   const std::function<void(const LeafColoredTree&)>& f) {
  const auto labels = sorted_unique(leaves);
  if (labels.empty()) return;
  if (labels.size() == 1) {
    RawTree raw;
    raw.root = raw.add_leaf(labels.front());
    f(LeafColoredTree(std::move(raw)));
    return;
  }
  Enumerator e(static_cast<int>(labels.size()));
  e.run([&](const std::vector<std::uint32_t>& clusters) { f(materialize(clusters, labels)); });
}

std::size_t count_trees(std::size_t n) {
  if (n > kOracleMaxLeaves) throw InputError("oracle: leaf bound exceeded");
  if (n <= 1) return n;
  Enumerator e(static_cast<int>(n));
  std::size_t count = 0;
  e.run([&](const std::vector<std::uint32_t>&) { ++count; });
  return count;
}

TripleSet closure_oracle(const TripleSet& ts, std::span<const std::string> leaves) {
  const auto labels = sorted_unique(leaves);
  const int n = static_cast<int>(labels.size());
  if (n < 3) return TripleSet(labels);
  Enumerator e(n);
  const Bits want = encode(ts, labels, e);
  Bits meet{~0ull, ~0ull, ~0ull};
  bool any = false;
  e.run([&](const std::vector<std::uint32_t>& clusters) {
    const Bits r = e.bits_of(clusters);
    if (!subset(want, r)) return;
    any = true;
    for (int w = 0; w < 3; ++w) meet[w] &= r[w];
  });
  if (!any) throw InputError("closure: the triple set is inconsistent");
  std::vector<Triple> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (c != a && c != b && test_bit(meet, e.triple_id(a, b, c))) out.push_back({a, b, c});
  return TripleSet(labels, std::move(out));
}

bool identifies_oracle(const TripleSet& ts, const LeafColoredTree& tree) {
  const auto labels = sorted_unique(tree.leaf_labels());
  const int n = static_cast<int>(labels.size());
  if (n < 3) return true;
  Enumerator e(n);
  const Bits want = encode(ts, labels, e);
  const Bits mine = encode(all_triples(tree), labels, e);
  if (!subset(want, mine)) return false;
  bool ok = true;
  e.run([&](const std::vector<std::uint32_t>& clusters) {
    if (!ok) return;
    const Bits r = e.bits_of(clusters);
    if (subset(want, r) && !subset(mine, r)) ok = false;
  });
  return ok;
}

}  // namespace bmg
