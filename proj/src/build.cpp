#include "bmg/build.hpp"

#include <algorithm>
#include <numeric>

#include "bmg/error.hpp"

namespace bmg {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

/// Groups positions 0..n-1 by union-find root; groups are ordered by their
/// smallest member and each group is increasing.
std::vector<std::vector<int>> groups(UnionFind& uf, int n) {
  std::vector<int> slot(n, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    const int r = uf.find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

/// Shared recursion: `split(S)` returns the Aho components of S (as
/// sub-vectors of S, each increasing, ordered by smallest member) and the
/// recursion assembles a RawTree over universe indices.
template <class Split>
bool build_rec(const std::vector<int>& subset, Split& split, RawTree& raw, NodeId& out,
               std::vector<int>& failed, const std::vector<std::string>& labels,
               const std::vector<std::string>* colors) {
  if (subset.size() == 1) {
    const int v = subset.front();
    out = raw.add_leaf(labels[v], colors ? (*colors)[v] : std::string());
    return true;
  }
  auto parts = split(subset);
  if (parts.size() == 1) {
    failed = subset;
    return false;
  }
  std::vector<NodeId> kids;
  kids.reserve(parts.size());
  for (const auto& p : parts) {
    NodeId child = kNoNode;
    if (!build_rec(p, split, raw, child, failed, labels, colors)) return false;
    kids.push_back(child);
  }
  out = raw.add_inner(std::move(kids));
  return true;
}

template <class Split>
BuildOutcome run_build(int n, Split& split, const std::vector<std::string>& labels,
                       const std::vector<std::string>* colors) {
  BuildOutcome result;
  if (n == 0) return result;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  RawTree raw;
  std::vector<int> failed;
  NodeId root = kNoNode;
  if (!build_rec(all, split, raw, root, failed, labels, colors)) {
    for (int v : failed) result.certificate.push_back(labels[v]);
    return result;
  }
  raw.root = root;
  result.tree.emplace(std::move(raw));
  return result;
}

}  // namespace

std::vector<std::vector<int>> AhoGraph::components() const {
  const int n = static_cast<int>(vertices.size());
  UnionFind uf(n);
  for (auto [a, b] : edges) uf.unite(a, b);
  return groups(uf, n);
}

AhoGraph aho_graph(const TripleSet& ts, std::span<const std::string> leaves) {
  AhoGraph g;
  g.vertices.assign(leaves.begin(), leaves.end());
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  // Map universe index -> Aho vertex index.
  std::vector<int> pos(ts.universe().size(), -1);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const int u = ts.index_of(g.vertices[i]);
    if (u >= 0) pos[u] = static_cast<int>(i);
  }
  for (const auto& t : ts.triples()) {
    if (pos[t.a] < 0 || pos[t.b] < 0 || pos[t.c] < 0) continue;
    g.edges.emplace_back(std::min(pos[t.a], pos[t.b]), std::max(pos[t.a], pos[t.b]));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

BuildOutcome build(const TripleSet& ts, std::span<const std::string> leaves) {
  std::vector<std::string> labels(leaves.begin(), leaves.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const int n = static_cast<int>(labels.size());

  // Triples re-indexed over `labels`, dropping those that leave the set.
  std::vector<int> pos(ts.universe().size(), -1);
  for (int i = 0; i < n; ++i) {
    const int u = ts.index_of(labels[i]);
    if (u >= 0) pos[u] = i;
  }
  std::vector<Triple> triples;
  for (const auto& t : ts.triples())
    if (pos[t.a] >= 0 && pos[t.b] >= 0 && pos[t.c] >= 0) triples.push_back({pos[t.a], pos[t.b], pos[t.c]});

  // Triples are restricted eagerly: each level hands every component the
  // triples lying entirely inside it.
  std::vector<std::vector<Triple>> pending{std::move(triples)};
  std::vector<int> where(n, -1), local(n, -1);
  auto split = [&](const std::vector<int>& subset) {
    // The parent level stashed this subset's triples under where[member].
    const auto mine = std::move(pending[where[subset.front()]]);
    const int m = static_cast<int>(subset.size());
    for (int i = 0; i < m; ++i) local[subset[i]] = i;
    UnionFind uf(m);
    for (const auto& t : mine) uf.unite(local[t.a], local[t.b]);
    auto parts = groups(uf, m);
    std::vector<std::vector<int>> out;
    out.reserve(parts.size());
    std::vector<std::vector<Triple>> buckets(parts.size());
    std::vector<int> part_of(m);
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (int i : parts[p]) part_of[i] = static_cast<int>(p);
    for (const auto& t : mine) {
      const int p = part_of[local[t.a]];
      if (part_of[local[t.c]] == p) buckets[p].push_back(t);
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
      std::vector<int> members;
      members.reserve(parts[p].size());
      for (int i : parts[p]) members.push_back(subset[i]);
      const int key = static_cast<int>(pending.size());
      pending.push_back(std::move(buckets[p]));
      for (int v : members) where[v] = key;
      out.push_back(std::move(members));
    }
    return out;
  };
  for (int i = 0; i < n; ++i) where[i] = 0;
  return run_build(n, split, labels, nullptr);
}

BuildOutcome build(const TripleSet& ts) { return build(ts, ts.universe()); }

BuildOutcome build_from_graph(const ColoredDigraph& g, bool rbin) {
  if (!g.is_properly_colored()) throw InputError("build: graph is not properly colored");
  const int n = g.size();
  const int k = g.color_count();
  std::vector<std::string> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = g.color(v);

  std::vector<int> local(n, -1), count(k), tally(k), first(k);
  auto split = [&](const std::vector<int>& subset) {
    const int m = static_cast<int>(subset.size());
    for (int i = 0; i < m; ++i) local[subset[i]] = i;
    std::fill(count.begin(), count.end(), 0);
    for (int v : subset) ++count[g.color_index(v)];
    UnionFind uf(m);
    for (int i = 0; i < m; ++i) {
      const int a = subset[i];
      std::fill(tally.begin(), tally.end(), 0);
      std::fill(first.begin(), first.end(), -1);
      for (int b : g.out(a))
        if (local[b] >= 0) ++tally[g.color_index(b)];
      for (int b : g.out(a)) {
        if (local[b] < 0) continue;
        const int s = g.color_index(b);
        // ab|b' for some b' of color s in the subset that a misses.
        if (tally[s] < count[s]) uf.unite(i, local[b]);
        // bb'|a for every other out-neighbor b' of a with color s.
        if (rbin && tally[s] >= 2) {
          if (first[s] < 0)
            first[s] = local[b];
          else
            uf.unite(first[s], local[b]);
        }
      }
    }
    auto parts = groups(uf, m);
    for (int v : subset) local[v] = -1;
    std::vector<std::vector<int>> out;
    out.reserve(parts.size());
    for (const auto& p : parts) {
      std::vector<int> members;
      members.reserve(p.size());
      for (int i : p) members.push_back(subset[i]);
      out.push_back(std::move(members));
    }
    return out;
  };
  return run_build(n, split, g.ids(), &colors);
}

std::string_view to_string(Rejection r) {
  switch (r) {
    case Rejection::kNone: return "none";
    case Rejection::kNotSf: return "not-sf";
    case Rejection::kRbinInconsistent: return "rbin-inconsistent";
    case Rejection::kNotBmg: return "not-a-bmg";
  }
  return "none";
}

LeafColoredTree lrt(const ColoredDigraph& g) {
  if (g.size() == 0) throw InputError("lrt: empty graph");
  if (!g.is_properly_colored())
    throw NotExplainableError("not-a-bmg", {}, "graph is not properly colored");
  auto out = build_from_graph(g, false);
  if (!out.ok())
    throw NotExplainableError("not-a-bmg", out.certificate, "informative triples are inconsistent");
  if (!(bmg_from_tree(*out.tree) == g))
    throw NotExplainableError("not-a-bmg", {}, "the Aho tree of R does not explain the graph");
  return std::move(*out.tree);
}

Explanation binary_explaining_tree(const ColoredDigraph& g) {
  Explanation ex;
  if (g.size() == 0) throw InputError("binary_explaining_tree: empty graph");
  if (!is_sf_colored(g)) {
    ex.rejection = Rejection::kNotSf;
    return ex;
  }
  auto out = build_from_graph(g, true);
  if (!out.ok()) {
    ex.rejection = Rejection::kRbinInconsistent;
    ex.certificate = std::move(out.certificate);
    return ex;
  }
  ex.tree = binary_refine(*out.tree);
  return ex;
}

LeafColoredTree brt(const ColoredDigraph& g) {
  if (g.size() == 0) throw InputError("brt: empty graph");
  if (!is_sf_colored(g)) throw NotExplainableError("not-sf", {}, "graph is not sf-colored");
  auto out = build_from_graph(g, true);
  if (!out.ok())
    throw NotExplainableError("rbin-inconsistent", out.certificate,
                              "Rbin is inconsistent; the Aho graph on the certificate is connected");
  return std::move(*out.tree);
}

}  // namespace bmg
