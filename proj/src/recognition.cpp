#include "bmg/recognition.hpp"

#include <algorithm>
#include <set>

#include "bmg/build.hpp"
#include "bmg/error.hpp"

namespace bmg {

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::kHourglass: return "hourglass";
    case WitnessKind::kF1: return "F1";
    case WitnessKind::kF2: return "F2";
    case WitnessKind::kF3: return "F3";
    case WitnessKind::kTreeCondition: return "tree-condition";
  }
  return "hourglass";
}

Recognition recognize(const ColoredDigraph& g) {
  Recognition rec;
  if (g.size() == 0 || !g.is_properly_colored()) return rec;
  auto out = build_from_graph(g, false);
  if (!out.ok()) {
    rec.certificate = std::move(out.certificate);
    return rec;
  }
  if (bmg_from_tree(*out.tree) == g) {
    rec.bmg = true;
    rec.lrt = std::move(out.tree);
  }
  return rec;
}

bool is_bmg(const ColoredDigraph& g) { return recognize(g).bmg; }

namespace {

std::vector<std::string> ids_of(const ColoredDigraph& g, std::initializer_list<int> vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.id(v));
  return out;
}

ForbiddenWitness graph_witness(WitnessKind kind, std::vector<std::string> ids) {
  ForbiddenWitness w;
  w.kind = kind;
  w.vertices = std::move(ids);
  return w;
}

bool hourglass_at(const ColoredDigraph& g, int x, int y, int x2, int y2) {
  const int cx = g.color_index(x), cy = g.color_index(y);
  if (cx == cy || g.color_index(x2) != cx || g.color_index(y2) != cy) return false;
  if (x == x2 || y == y2) return false;
  return g.has_arc(x, y) && g.has_arc(y, x) && g.has_arc(x2, y2) && g.has_arc(y2, x2) &&
         g.has_arc(x, y2) && g.has_arc(y, x2) && !g.has_arc(y2, x) && !g.has_arc(x2, y);
}

bool f1_at(const ColoredDigraph& g, int x1, int x2, int y1, int y2) {
  return g.has_arc(x1, y1) && g.has_arc(y2, x2) && g.has_arc(y1, x2) && !g.has_arc(x1, y2) &&
         !g.has_arc(y2, x1);
}

bool f2_at(const ColoredDigraph& g, int x1, int x2, int y1, int y2) {
  return g.has_arc(x1, y1) && g.has_arc(y1, x2) && g.has_arc(x2, y2) && !g.has_arc(x1, y2);
}

bool f3_at(const ColoredDigraph& g, int x1, int x2, int y1, int y2, int y3) {
  return g.has_arc(x1, y1) && g.has_arc(x2, y2) && g.has_arc(x1, y3) && g.has_arc(x2, y3) &&
         !g.has_arc(x1, y2) && !g.has_arc(x2, y1);
}

bool two_colored_roles(const ColoredDigraph& g, std::span<const int> xs, std::span<const int> ys) {
  std::set<int> all;
  for (int v : xs) all.insert(v);
  for (int v : ys) all.insert(v);
  if (all.size() != xs.size() + ys.size()) return false;
  const int cx = g.color_index(xs[0]), cy = g.color_index(ys[0]);
  if (cx == cy) return false;
  for (int v : xs)
    if (g.color_index(v) != cx) return false;
  for (int v : ys)
    if (g.color_index(v) != cy) return false;
  return true;
}

}  // namespace

std::optional<ForbiddenWitness> find_hourglass(const ColoredDigraph& g) {
  if (!g.is_properly_colored()) throw InputError("hourglass: graph is not properly colored");
  const int n = g.size();
  for (int x = 0; x < n; ++x)
    for (int y : g.out(x)) {
      if (!g.has_arc(y, x)) continue;
      for (int x2 : g.out(y)) {
        if (x2 == x || g.color_index(x2) != g.color_index(x) || g.has_arc(x2, y)) continue;
        for (int y2 : g.out(x2))
          if (hourglass_at(g, x, y, x2, y2))
            return graph_witness(WitnessKind::kHourglass, ids_of(g, {x, y, x2, y2}));
      }
    }
  return std::nullopt;
}

bool is_binary_explainable_via_hourglass(const ColoredDigraph& g) {
  if (!is_bmg(g)) throw InputError("the hourglass criterion is defined for BMGs only");
  return !find_hourglass(g).has_value();
}

std::optional<ForbiddenWitness> find_f_graph(const ColoredDigraph& g) {
  if (!g.is_properly_colored()) throw InputError("F-graphs: graph is not properly colored");
  if (g.color_count() > 2) throw InputError("F-graphs are defined for 2-colored graphs only");
  const int n = g.size();
  auto same = [&](int a, int b) { return g.color_index(a) == g.color_index(b); };

  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2) {
      if (x2 == x1 || !same(x1, x2)) continue;
      for (int y1 = 0; y1 < n; ++y1) {
        if (same(x1, y1) || !g.has_arc(x1, y1)) continue;
        for (int y2 = 0; y2 < n; ++y2)
          if (y2 != y1 && same(y1, y2) && f1_at(g, x1, x2, y1, y2))
            return graph_witness(WitnessKind::kF1, ids_of(g, {x1, x2, y1, y2}));
      }
    }

  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2) {
      if (x2 == x1 || !same(x1, x2)) continue;
      for (int y1 = 0; y1 < n; ++y1) {
        if (same(x1, y1) || !g.has_arc(x1, y1)) continue;
        for (int y2 = 0; y2 < n; ++y2)
          if (y2 != y1 && same(y1, y2) && f2_at(g, x1, x2, y1, y2))
            return graph_witness(WitnessKind::kF2, ids_of(g, {x1, x2, y1, y2}));
      }
    }

  // y1 in N(x1)\N(x2), y2 in N(x2)\N(x1), y3 in N(x1) and N(x2).
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2) {
      if (x2 == x1 || !same(x1, x2)) continue;
      int common = -1;
      for (int y : g.out(x1))
        if (g.has_arc(x2, y)) {
          common = y;
          break;
        }
      if (common < 0) continue;
      for (int y1 : g.out(x1)) {
        if (g.has_arc(x2, y1)) continue;
        for (int y2 : g.out(x2)) {
          if (g.has_arc(x1, y2)) continue;
          return graph_witness(WitnessKind::kF3, ids_of(g, {x1, x2, y1, y2, common}));
        }
      }
    }
  return std::nullopt;
}

namespace {

// Color sets below every vertex as sorted palette indices packed in a
// bitmap per vertex.
std::vector<std::vector<char>> subtree_colors(const LeafColoredTree& tree,
                                              const std::vector<std::string>& palette) {
  std::vector<std::vector<char>> out(tree.size(), std::vector<char>(palette.size(), 0));
  const auto pre = tree.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const NodeId u = *it;
    if (tree.is_leaf(u)) {
      const auto c = std::lower_bound(palette.begin(), palette.end(), tree.color(u)) - palette.begin();
      out[u][c] = 1;
      continue;
    }
    for (NodeId c : tree.children(u))
      for (std::size_t k = 0; k < palette.size(); ++k) out[u][k] |= out[c][k];
  }
  return out;
}

std::vector<std::string> palette_of(const LeafColoredTree& tree) {
  std::vector<std::string> palette;
  for (NodeId v : tree.leaves()) palette.push_back(tree.color(v));
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  return palette;
}

}  // namespace

std::optional<ForbiddenWitness> tree_binary_condition(const LeafColoredTree& tree) {
  const auto palette = palette_of(tree);
  const auto cols = subtree_colors(tree, palette);
  const int k = static_cast<int>(palette.size());
  for (NodeId u : tree.preorder()) {
    const auto& ch = tree.children(u);
    if (ch.size() < 3) continue;
    for (NodeId v1 : ch)
      for (NodeId v2 : ch) {
        if (v2 == v1) continue;
        for (NodeId v3 : ch) {
          if (v3 == v1 || v3 == v2) continue;
          for (int r = 0; r < k; ++r) {
            if (!cols[v1][r] || !cols[v2][r] || cols[v3][r]) continue;
            for (int s = 0; s < k; ++s) {
              if (s == r || !cols[v2][s] || !cols[v3][s] || cols[v1][s]) continue;
              ForbiddenWitness w;
              w.kind = WitnessKind::kTreeCondition;
              w.node = u;
              w.children = {v1, v2, v3};
              w.r = palette[r];
              w.s = palette[s];
              return w;
            }
          }
        }
      }
  }
  return std::nullopt;
}

bool verify_witness(const ColoredDigraph& g, const ForbiddenWitness& w) {
  std::vector<int> v;
  for (const auto& id : w.vertices) {
    const int i = g.index_of(id);
    if (i < 0) return false;
    v.push_back(i);
  }
  switch (w.kind) {
    case WitnessKind::kHourglass:
      return v.size() == 4 && hourglass_at(g, v[0], v[1], v[2], v[3]);
    case WitnessKind::kF1:
    case WitnessKind::kF2: {
      if (v.size() != 4) return false;
      const int xs[] = {v[0], v[1]}, ys[] = {v[2], v[3]};
      if (!two_colored_roles(g, xs, ys)) return false;
      return w.kind == WitnessKind::kF1 ? f1_at(g, v[0], v[1], v[2], v[3]) : f2_at(g, v[0], v[1], v[2], v[3]);
    }
    case WitnessKind::kF3: {
      if (v.size() != 5) return false;
      const int xs[] = {v[0], v[1]}, ys[] = {v[2], v[3], v[4]};
      return two_colored_roles(g, xs, ys) && f3_at(g, v[0], v[1], v[2], v[3], v[4]);
    }
    case WitnessKind::kTreeCondition: return false;
  }
  return false;
}

bool verify_witness(const LeafColoredTree& tree, const ForbiddenWitness& w) {
  if (w.kind != WitnessKind::kTreeCondition || w.r == w.s) return false;
  if (w.node < 0 || w.node >= static_cast<NodeId>(tree.size())) return false;
  const auto& ch = tree.children(w.node);
  const auto [v1, v2, v3] = w.children;
  for (NodeId c : w.children)
    if (std::find(ch.begin(), ch.end(), c) == ch.end()) return false;
  if (v1 == v2 || v2 == v3 || v1 == v3) return false;
  auto below = [&](NodeId v) {
    std::set<std::string> out;
    for (int r : tree.cluster(v)) out.insert(tree.color(tree.leaves()[r]));
    return out;
  };
  const auto c1 = below(v1), c2 = below(v2), c3 = below(v3);
  return c1.count(w.r) && c2.count(w.r) && c2.count(w.s) && c3.count(w.s) && !c1.count(w.s) &&
         !c3.count(w.r);
}

}  // namespace bmg
