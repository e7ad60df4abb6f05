#include "bmg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "bmg/error.hpp"

namespace bmg {

ColoredDigraph::ColoredDigraph(std::vector<Vertex> vertices, std::span<const Arc> arcs) {
  std::vector<std::string> ids;
  ids.reserve(vertices.size());
  for (const auto& v : vertices) ids.push_back(v.id);
  std::vector<int> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ids[a] < ids[b]; });
  auto pos = [&](const std::string& id) {
    auto it = std::lower_bound(order.begin(), order.end(), id,
                               [&](int a, const std::string& x) { return ids[a] < x; });
    if (it == order.end() || ids[*it] != id) throw InputError("graph: unknown vertex '" + id + "'");
    return *it;
  };
  std::vector<std::pair<int, int>> idx;
  idx.reserve(arcs.size());
  for (const auto& [u, v] : arcs) idx.emplace_back(pos(u), pos(v));
  init(std::move(vertices), std::move(idx));
}

ColoredDigraph::ColoredDigraph(std::vector<Vertex> vertices,
                               std::span<const std::pair<int, int>> arcs) {
  init(std::move(vertices), {arcs.begin(), arcs.end()});
}

void ColoredDigraph::init(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> arcs) {
  const int n = static_cast<int>(vertices.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return vertices[a].id < vertices[b].id; });
  std::vector<int> new_index(n);
  for (int i = 0; i < n; ++i) new_index[order[i]] = i;

  ids_.resize(n);
  std::vector<std::string> raw_colors(n);
  for (int i = 0; i < n; ++i) {
    auto& v = vertices[order[i]];
    if (v.id.empty()) throw InputError("graph: empty vertex id");
    if (v.color.empty()) throw InputError("graph: vertex '" + v.id + "' has no color");
    ids_[i] = std::move(v.id);
    raw_colors[i] = std::move(v.color);
    if (i > 0 && ids_[i] == ids_[i - 1]) throw InputError("graph: duplicate vertex '" + ids_[i] + "'");
  }
  colors_ = raw_colors;
  std::sort(colors_.begin(), colors_.end());
  colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
  color_of_.resize(n);
  for (int i = 0; i < n; ++i)
    color_of_[i] = static_cast<int>(std::lower_bound(colors_.begin(), colors_.end(), raw_colors[i]) -
                                    colors_.begin());

  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  out_.assign(n, {});
  arc_count_ = 0;
  for (auto [a, b] : arcs) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("graph: arc endpoint out of range");
    const int u = new_index[a], v = new_index[b];
    if (u == v) throw InputError("graph: self-loop at '" + ids_[u] + "'");
    char& cell = adj_[static_cast<std::size_t>(u) * n + v];
    if (cell) continue;
    cell = 1;
    out_[u].push_back(v);
    ++arc_count_;
  }
  for (auto& o : out_) std::sort(o.begin(), o.end());
}

int ColoredDigraph::index_of(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return -1;
  return static_cast<int>(it - ids_.begin());
}

int ColoredDigraph::vertex(std::string_view id) const {
  const int v = index_of(id);
  if (v < 0) throw InputError("graph: unknown vertex '" + std::string(id) + "'");
  return v;
}

std::vector<Arc> ColoredDigraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (int u = 0; u < size(); ++u)
    for (int v : out_[u]) out.emplace_back(ids_[u], ids_[v]);
  return out;
}

std::vector<std::pair<int, int>> ColoredDigraph::arc_indices() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(arc_count_);
  for (int u = 0; u < size(); ++u)
    for (int v : out_[u]) out.emplace_back(u, v);
  return out;
}

bool ColoredDigraph::is_properly_colored() const {
  for (int u = 0; u < size(); ++u)
    for (int v : out_[u])
      if (color_of_[u] == color_of_[v]) return false;
  return true;
}

bool operator==(const ColoredDigraph& a, const ColoredDigraph& b) {
  if (a.ids_ != b.ids_ || a.out_ != b.out_) return false;
  for (int v = 0; v < a.size(); ++v)
    if (a.color(v) != b.color(v)) return false;
  return true;
}

ColoredDigraph bmg_from_tree(const LeafColoredTree& tree) {
  if (!tree.has_colors()) throw InputError("bmg_from_tree: every leaf needs a color");
  const auto& leaves = tree.leaves();
  const int n = static_cast<int>(leaves.size());
  std::vector<Vertex> vertices;
  vertices.reserve(n);
  for (NodeId v : leaves) vertices.push_back({tree.label(v), tree.color(v)});

  std::vector<std::string> palette;
  for (const auto& v : vertices) palette.push_back(v.color);
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  std::vector<int> col(n);
  for (int i = 0; i < n; ++i)
    col[i] = static_cast<int>(std::lower_bound(palette.begin(), palette.end(), vertices[i].color) -
                              palette.begin());

  // Leaf ranks below each vertex, collected bottom-up along the pre-order.
  std::vector<std::vector<int>> below(tree.size());
  const auto pre = tree.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const NodeId u = *it;
    if (tree.is_leaf(u)) {
      below[u] = {tree.rank(u)};
      continue;
    }
    for (NodeId c : tree.children(u)) below[u].insert(below[u].end(), below[c].begin(), below[c].end());
  }

  // Walking up from x, the first ancestor holding a leaf of color s fixes
  // every leaf of color s below it as a best match.
  std::vector<std::pair<int, int>> arcs;
  std::vector<char> seen(palette.size());
  std::vector<int> fresh;
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    seen[col[x]] = 1;
    NodeId prev = leaves[x];
    for (NodeId u = tree.parent(prev); u != kNoNode; prev = u, u = tree.parent(u)) {
      fresh.clear();
      for (NodeId c : tree.children(u)) {
        if (c == prev) continue;
        for (int y : below[c])
          if (!seen[col[y]]) {
            arcs.emplace_back(x, y);
            fresh.push_back(col[y]);
          }
      }
      for (int s : fresh) seen[s] = 1;
    }
  }
  return ColoredDigraph(std::move(vertices), std::span<const std::pair<int, int>>(arcs));
}

bool is_sf_colored(const ColoredDigraph& g) {
  if (!g.is_properly_colored()) return false;
  const int k = g.color_count();
  std::vector<char> hit(k);
  for (int u = 0; u < g.size(); ++u) {
    std::fill(hit.begin(), hit.end(), 0);
    int count = 0;
    for (int v : g.out(u))
      if (!hit[g.color_index(v)]) {
        hit[g.color_index(v)] = 1;
        ++count;
      }
    if (count != k - 1) return false;
  }
  return true;
}

namespace {

enum class Which { kInformative, kForbidden, kRbin };

TripleSet extract(const ColoredDigraph& g, Which which) {
  if (!g.is_properly_colored()) throw InputError("triples: graph is not properly colored");
  const int n = g.size();
  std::vector<std::vector<int>> by_color(g.color_count());
  for (int v = 0; v < n; ++v) by_color[g.color_index(v)].push_back(v);

  std::vector<Triple> out;
  for (int a = 0; a < n; ++a) {
    for (int s = 0; s < g.color_count(); ++s) {
      if (s == g.color_index(a)) continue;
      const auto& cls = by_color[s];
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          const int b = cls[i], b2 = cls[j];
          const bool ab = g.has_arc(a, b), ab2 = g.has_arc(a, b2);
          if (ab != ab2) {
            if (which != Which::kForbidden) out.push_back(ab ? Triple::make(a, b, b2) : Triple::make(a, b2, b));
          } else if (ab) {
            if (which == Which::kForbidden) {
              out.push_back(Triple::make(a, b, b2));
              out.push_back(Triple::make(a, b2, b));
            } else if (which == Which::kRbin) {
              out.push_back(Triple::make(b, b2, a));
            }
          }
        }
      }
    }
  }
  return TripleSet(g.ids(), std::move(out));
}

}  // namespace

TripleSet informative_triples(const ColoredDigraph& g) { return extract(g, Which::kInformative); }
TripleSet forbidden_triples(const ColoredDigraph& g) { return extract(g, Which::kForbidden); }
TripleSet rbin_triples(const ColoredDigraph& g) { return extract(g, Which::kRbin); }

ColoredDigraph induced_subgraph(const ColoredDigraph& g, std::span<const int> keep) {
  std::vector<int> pos(g.size(), -1);
  std::vector<Vertex> vertices;
  for (int v : keep) {
    if (v < 0 || v >= g.size()) throw InputError("induced_subgraph: vertex out of range");
    if (pos[v] >= 0) continue;
    pos[v] = static_cast<int>(vertices.size());
    vertices.push_back({g.id(v), g.color(v)});
  }
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < g.size(); ++u) {
    if (pos[u] < 0) continue;
    for (int v : g.out(u))
      if (pos[v] >= 0) arcs.emplace_back(pos[u], pos[v]);
  }
  return ColoredDigraph(std::move(vertices), std::span<const std::pair<int, int>>(arcs));
}

ColoredDigraph induced_subgraph(const ColoredDigraph& g, std::span<const std::string> keep) {
  std::vector<int> idx;
  idx.reserve(keep.size());
  for (const auto& id : keep) idx.push_back(g.vertex(id));
  return induced_subgraph(g, std::span<const int>(idx));
}

std::string to_json(const ColoredDigraph& g, int indent) {
  nlohmann::ordered_json j;
  auto vs = nlohmann::ordered_json::array();
  for (int v = 0; v < g.size(); ++v) vs.push_back({{"id", g.id(v)}, {"color", g.color(v)}});
  auto as = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.arcs()) as.push_back({u, v});
  j["vertices"] = std::move(vs);
  j["arcs"] = std::move(as);
  return j.dump(indent);
}

ColoredDigraph graph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("graph json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw InputError("graph json: expected an object with a 'vertices' array");
  std::vector<Vertex> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v.contains("color") || !v["id"].is_string() ||
        !v["color"].is_string())
      throw InputError("graph json: each vertex needs string 'id' and 'color'");
    vertices.push_back({v["id"].get<std::string>(), v["color"].get<std::string>()});
  }
  std::vector<Arc> arcs;
  if (j.contains("arcs")) {
    if (!j["arcs"].is_array()) throw InputError("graph json: 'arcs' must be an array");
    for (const auto& a : j["arcs"]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
        throw InputError("graph json: each arc is a pair of vertex ids");
      arcs.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
    }
  }
  return ColoredDigraph(std::move(vertices), std::span<const Arc>(arcs));
}

ColoredDigraph graph_from_tsv(std::string_view arcs_tsv, const ColorMap& colors) {
  std::vector<Vertex> vertices;
  for (const auto& [id, c] : colors) vertices.push_back({id, c});
  std::vector<Arc> arcs;
  std::istringstream in{std::string(arcs_tsv)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw InputError("arc tsv: line " + std::to_string(lineno) + " needs exactly two columns");
    arcs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return ColoredDigraph(std::move(vertices), std::span<const Arc>(arcs));
}

}  // namespace bmg
