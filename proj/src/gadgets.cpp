#include "bmg/gadgets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bmg/error.hpp"

namespace bmg {

namespace {

void check_class(ClassSize c, const std::string& what) {
  if (c.black < 1 || c.white < 1) throw InputError("gadget: " + what + " needs at least one black and one white vertex");
}

}  // namespace

LemmaGadget lemma_gadget(ClassSize x, std::span<const ClassSize> ys, std::string_view prefix) {
  if (ys.empty()) throw InputError("gadget: at least one Y set is required");
  check_class(x, "X");
  for (std::size_t i = 0; i < ys.size(); ++i) check_class(ys[i], "Y" + std::to_string(i + 1));

  const std::string p(prefix);
  std::vector<Vertex> vs;
  std::vector<int> set_of;  // 0 = X, i = Y_i
  std::vector<bool> black;
  auto add = [&](std::string id, int set, bool b) {
    vs.push_back({std::move(id), std::string(b ? kBlack : kWhite)});
    set_of.push_back(set);
    black.push_back(b);
  };
  for (int j = 0; j < x.black; ++j) add(p + "xb" + std::to_string(j), 0, true);
  for (int j = 0; j < x.white; ++j) add(p + "xw" + std::to_string(j), 0, false);
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const std::string base = p + "y" + std::to_string(i + 1);
    for (int j = 0; j < ys[i].black; ++j) add(base + "b" + std::to_string(j), static_cast<int>(i + 1), true);
    for (int j = 0; j < ys[i].white; ++j) add(base + "w" + std::to_string(j), static_cast<int>(i + 1), false);
  }

  const int n = static_cast<int>(vs.size());
  std::vector<std::pair<int, int>> arcs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (black[a] == black[b]) continue;
      const bool in_x = set_of[a] == 0;
      if (in_x && set_of[b] == 0) {
        if (black[a]) arcs.emplace_back(a, b);
      } else if (in_x || set_of[a] == set_of[b]) {
        arcs.emplace_back(a, b);
      }
    }

  RawTree raw;
  std::vector<NodeId> leaf(n);
  for (int v = 0; v < n; ++v) leaf[v] = raw.add_leaf(vs[v].id, vs[v].color);
  std::vector<NodeId> u_kids;
  for (int v = 0; v < n; ++v)
    if (set_of[v] == 0 && !black[v]) u_kids.push_back(leaf[v]);
  for (std::size_t i = 0; i < ys.size(); ++i) {
    std::vector<NodeId> star;
    for (int v = 0; v < n; ++v)
      if (set_of[v] == static_cast<int>(i + 1)) star.push_back(leaf[v]);
    u_kids.push_back(raw.add_inner(std::move(star)));
  }
  std::vector<NodeId> root_kids;
  for (int v = 0; v < n; ++v)
    if (set_of[v] == 0 && black[v]) root_kids.push_back(leaf[v]);
  root_kids.push_back(raw.add_inner(std::move(u_kids)));
  raw.root = raw.add_inner(std::move(root_kids));

  ColoredDigraph g(std::move(vs), std::span<const std::pair<int, int>>(arcs));
  return {std::move(g), LeafColoredTree(std::move(raw))};
}

LemmaGadget disjoint_union(std::span<const LemmaGadget> parts) {
  if (parts.empty()) throw InputError("gadget: empty union");
  if (parts.size() == 1) return parts.front();
  std::vector<Vertex> vs;
  std::vector<Arc> arcs;
  std::set<std::string> seen;
  RawTree raw;
  std::vector<NodeId> roots;
  for (const auto& part : parts) {
    for (int v = 0; v < part.graph.size(); ++v) {
      if (!seen.insert(part.graph.id(v)).second)
        throw InputError("gadget: id '" + part.graph.id(v) + "' occurs in two parts");
      vs.push_back({part.graph.id(v), part.graph.color(v)});
    }
    for (auto& a : part.graph.arcs()) arcs.push_back(a);
    const auto sub = part.tree.to_raw();
    const auto offset = static_cast<NodeId>(raw.nodes.size());
    for (auto node : sub.nodes) {
      if (node.parent != kNoNode) node.parent += offset;
      for (auto& c : node.children) c += offset;
      raw.nodes.push_back(std::move(node));
    }
    roots.push_back(sub.root + offset);
  }
  raw.root = raw.add_inner(std::move(roots));
  ColoredDigraph g(std::move(vs), std::span<const Arc>(arcs));
  return {std::move(g), LeafColoredTree(std::move(raw))};
}

X3cGadget x3c_gadget(int n_elements, std::span<const std::array<int, 3>> subsets) {
  if (n_elements < 3 || n_elements % 3 != 0)
    throw InputError("gadget: the element count must be a positive multiple of 3, got " + std::to_string(n_elements));
  if (subsets.empty()) throw InputError("gadget: at least one subset is required");
  for (const auto& c : subsets) {
    for (int e : c)
      if (e < 0 || e >= n_elements) throw InputError("gadget: subset element " + std::to_string(e) + " out of range");
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) throw InputError("gadget: subset with a repeated element");
  }
  X3cGadget out;
  out.t = n_elements / 3;
  out.m = static_cast<int>(subsets.size());
  out.r = 18L * out.t * out.t;
  out.k = 6 * out.r * (out.m - out.t) + out.r - 18L * out.t;
  out.q = 3 * out.k;
  out.subsets.assign(subsets.begin(), subsets.end());
  if (out.q < 1) throw InputError("gadget: degenerate parameters (q = " + std::to_string(out.q) + ")");
  const long total = 2L * n_elements + out.m * (2 * out.r + 2 * out.q);
  if (total > kGadgetMaxVertices)
    throw InputError("gadget: " + std::to_string(total) + " vertices exceed the limit of " +
                     std::to_string(kGadgetMaxVertices));

  std::vector<Vertex> vs;
  vs.reserve(static_cast<std::size_t>(total));
  auto add_block = [&](const std::string& base, long count, std::string_view color) {
    const int first = static_cast<int>(vs.size());
    const char tag = color == kBlack ? 'b' : 'w';
    for (long j = 0; j < count; ++j) vs.push_back({base + tag + std::to_string(j), std::string(color)});
    return first;
  };
  std::vector<int> sb(n_elements), sw(n_elements);
  for (int e = 0; e < n_elements; ++e) {
    sb[e] = static_cast<int>(vs.size());
    vs.push_back({"s" + std::to_string(e) + "b", std::string(kBlack)});
    sw[e] = static_cast<int>(vs.size());
    vs.push_back({"s" + std::to_string(e) + "w", std::string(kWhite)});
  }
  std::vector<std::pair<int, int>> arcs;
  for (int e = 0; e < n_elements; ++e)
    for (int f = 0; f < n_elements; ++f) {
      arcs.emplace_back(sb[e], sw[f]);
      arcs.emplace_back(sw[e], sb[f]);
    }
  const int r = static_cast<int>(out.r), q = static_cast<int>(out.q);
  for (int i = 0; i < out.m; ++i) {
    const std::string idx = std::to_string(i + 1);
    const int xb = add_block("x" + idx, r, kBlack), xw = add_block("x" + idx, r, kWhite);
    const int yb = add_block("y" + idx, q, kBlack), yw = add_block("y" + idx, q, kWhite);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) arcs.emplace_back(xb + a, xw + b);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < q; ++b) {
        arcs.emplace_back(xb + a, yw + b);
        arcs.emplace_back(xw + a, yb + b);
      }
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        arcs.emplace_back(yb + a, yw + b);
        arcs.emplace_back(yw + a, yb + b);
      }
    for (int a = 0; a < r; ++a)
      for (int e : subsets[i]) {
        arcs.emplace_back(xw + a, sb[e]);
        arcs.emplace_back(xb + a, sw[e]);
      }
  }
  out.graph = ColoredDigraph(std::move(vs), std::span<const std::pair<int, int>>(arcs));
  return out;
}

EditSet x3c_cover_deletions(const X3cGadget& gadget, std::span<const int> cover) {
  const int n = 3 * gadget.t;
  std::vector<int> owner(n, -1);
  std::set<int> chosen;
  for (int i : cover) {
    if (i < 0 || i >= gadget.m) throw InputError("gadget: cover index " + std::to_string(i) + " out of range");
    if (!chosen.insert(i).second) throw InputError("gadget: cover lists subset " + std::to_string(i) + " twice");
    for (int e : gadget.subsets[i]) {
      if (owner[e] >= 0) throw InputError("gadget: cover subsets overlap on element " + std::to_string(e));
      owner[e] = i;
    }
  }
  if (std::count(owner.begin(), owner.end(), -1) > 0) throw InputError("gadget: cover misses an element");

  EditSet f;
  for (int i = 0; i < gadget.m; ++i) {
    if (chosen.count(i)) continue;
    const std::string idx = std::to_string(i + 1);
    for (long a = 0; a < gadget.r; ++a)
      for (int e : gadget.subsets[i]) {
        f.remove.emplace_back("x" + idx + "w" + std::to_string(a), "s" + std::to_string(e) + "b");
        f.remove.emplace_back("x" + idx + "b" + std::to_string(a), "s" + std::to_string(e) + "w");
      }
  }
  for (int e = 0; e < n; ++e)
    for (int g = 0; g < n; ++g)
      if (owner[e] != owner[g]) {
        f.remove.emplace_back("s" + std::to_string(e) + "b", "s" + std::to_string(g) + "w");
        f.remove.emplace_back("s" + std::to_string(e) + "w", "s" + std::to_string(g) + "b");
      }
  std::sort(f.remove.begin(), f.remove.end());
  return f;
}

}  // namespace bmg
