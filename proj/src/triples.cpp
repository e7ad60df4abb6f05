#include "bmg/triples.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "bmg/error.hpp"
#include "detail/leaf_lca.hpp"

namespace bmg {

Triple Triple::make(int x, int y, int outgroup) {
  if (x == y || x == outgroup || y == outgroup)
    throw InputError("triple: leaves must be pairwise distinct");
  return x < y ? Triple{x, y, outgroup} : Triple{y, x, outgroup};
}

TripleSet::TripleSet(std::vector<std::string> universe, std::vector<Triple> triples)
    : universe_(std::move(universe)), triples_(std::move(triples)) {
  if (!std::is_sorted(universe_.begin(), universe_.end()) ||
      std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end())
    throw InputError("triple set: universe must be sorted and unique");
  const int n = static_cast<int>(universe_.size());
  for (auto& t : triples_) {
    if (t.a < 0 || t.b < 0 || t.c < 0 || t.a >= n || t.b >= n || t.c >= n)
      throw InputError("triple set: index outside universe");
    t = Triple::make(t.a, t.b, t.c);
  }
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

int TripleSet::index_of(std::string_view label) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), label);
  if (it == universe_.end() || *it != label) return -1;
  return static_cast<int>(it - universe_.begin());
}

bool TripleSet::contains(const Triple& t) const {
  return std::binary_search(triples_.begin(), triples_.end(), Triple::make(t.a, t.b, t.c));
}

bool TripleSet::contains(std::string_view a, std::string_view b, std::string_view c) const {
  const int x = index_of(a), y = index_of(b), z = index_of(c);
  if (x < 0 || y < 0 || z < 0) return false;
  return contains(Triple::make(x, y, z));
}

std::string TripleSet::to_string(const Triple& t) const {
  return universe_[t.a] + universe_[t.b] + "|" + universe_[t.c];
}

std::vector<std::string> TripleSet::to_strings() const {
  std::vector<std::string> out;
  out.reserve(triples_.size());
  for (const auto& t : triples_) out.push_back(to_string(t));
  return out;
}

bool TripleSet::has_at_most_one_per_subset() const {
  std::set<std::array<int, 3>> seen;
  for (const auto& t : triples_) {
    std::array<int, 3> key{t.a, t.b, t.c};
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return false;
  }
  return true;
}

bool TripleSet::is_strictly_dense() const {
  const std::size_t n = universe_.size();
  const std::size_t subsets = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  return has_at_most_one_per_subset() && triples_.size() == subsets;
}

namespace {

using LabelTriple = std::tuple<std::string, std::string, std::string>;

std::set<LabelTriple> label_triples(const TripleSet& ts) {
  std::set<LabelTriple> out;
  const auto& u = ts.universe();
  for (const auto& t : ts.triples()) out.emplace(u[t.a], u[t.b], u[t.c]);
  return out;
}

}  // namespace

bool TripleSet::subset_of(const TripleSet& other) const {
  if (universe_ == other.universe_)
    return std::includes(other.triples_.begin(), other.triples_.end(), triples_.begin(), triples_.end());
  for (const auto& t : triples_)
    if (!other.contains(universe_[t.a], universe_[t.b], universe_[t.c])) return false;
  return true;
}

bool same_triples(const TripleSet& x, const TripleSet& y) {
  if (x.universe() == y.universe()) return x == y;
  return label_triples(x) == label_triples(y);
}

TripleSet restrict(const TripleSet& ts, std::span<const std::string> subset) {
  std::vector<std::string> universe(subset.begin(), subset.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  std::vector<int> remap(ts.universe().size(), -1);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const int old = ts.index_of(universe[i]);
    if (old >= 0) remap[old] = static_cast<int>(i);
  }
  std::vector<Triple> kept;
  for (const auto& t : ts.triples()) {
    const int a = remap[t.a], b = remap[t.b], c = remap[t.c];
    if (a >= 0 && b >= 0 && c >= 0) kept.push_back({a, b, c});
  }
  return TripleSet(std::move(universe), std::move(kept));
}

namespace {

std::vector<Triple> reindex(const TripleSet& ts, const std::vector<std::string>& universe) {
  std::vector<int> remap(ts.universe().size());
  for (std::size_t i = 0; i < remap.size(); ++i) {
    auto it = std::lower_bound(universe.begin(), universe.end(), ts.universe()[i]);
    remap[i] = static_cast<int>(it - universe.begin());
  }
  std::vector<Triple> out;
  out.reserve(ts.size());
  for (const auto& t : ts.triples()) out.push_back({remap[t.a], remap[t.b], remap[t.c]});
  return out;
}

}  // namespace

TripleSet triple_union(const TripleSet& x, const TripleSet& y) {
  std::vector<std::string> universe;
  std::set_union(x.universe().begin(), x.universe().end(), y.universe().begin(), y.universe().end(),
                 std::back_inserter(universe));
  auto ts = reindex(x, universe);
  auto more = reindex(y, universe);
  ts.insert(ts.end(), more.begin(), more.end());
  return TripleSet(std::move(universe), std::move(ts));
}

TripleSet triple_difference(const TripleSet& x, const TripleSet& y) {
  std::vector<Triple> kept;
  const auto& u = x.universe();
  for (const auto& t : x.triples())
    if (!y.contains(u[t.a], u[t.b], u[t.c])) kept.push_back(t);
  return TripleSet(u, std::move(kept));
}

TripleSet all_triples(const LeafColoredTree& tree) {
  const detail::LeafLcaTable table(tree);
  const int n = static_cast<int>(tree.leaf_count());
  std::vector<Triple> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const int out_rank = table.outgroup(i, j, k);
        if (out_rank == k) out.push_back({i, j, k});
        else if (out_rank == j) out.push_back({i, k, j});
        else if (out_rank == i) out.push_back({j, k, i});
      }
  return TripleSet(tree.leaf_labels(), std::move(out));
}

bool displays_all(const LeafColoredTree& tree, const TripleSet& ts) {
  const auto& u = ts.universe();
  std::vector<NodeId> node(u.size(), kNoNode);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (auto v = tree.find_leaf(u[i])) node[i] = *v;
  for (const auto& t : ts.triples()) {
    if (node[t.a] == kNoNode || node[t.b] == kNoNode || node[t.c] == kNoNode) continue;
    const NodeId ab = tree.lca(node[t.a], node[t.b]);
    const NodeId ac = tree.lca(node[t.a], node[t.c]);
    if (ab == ac || ac != tree.lca(node[t.b], node[t.c])) return false;
  }
  return true;
}

TripleSet make_triple_set(std::vector<std::string> universe,
                          std::span<const std::array<std::string, 3>> triples) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  TripleSet probe(universe);
  std::vector<Triple> out;
  for (const auto& [a, b, c] : triples) {
    const int x = probe.index_of(a), y = probe.index_of(b), z = probe.index_of(c);
    if (x < 0 || y < 0 || z < 0) throw InputError("triple " + a + b + "|" + c + " outside universe");
    out.push_back(Triple::make(x, y, z));
  }
  return TripleSet(std::move(universe), std::move(out));
}

}  // namespace bmg
