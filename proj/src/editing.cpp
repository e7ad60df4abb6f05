#include "bmg/editing.hpp"

#include <algorithm>
#include <json.hpp>

#include "bmg/build.hpp"
#include "bmg/error.hpp"

namespace bmg {

std::string_view to_string(EditMode m) {
  switch (m) {
    case EditMode::kEdit: return "edit";
    case EditMode::kDelete: return "delete";
    case EditMode::kComplete: return "complete";
  }
  return "edit";
}

EditMode parse_edit_mode(std::string_view s) {
  if (s == "edit") return EditMode::kEdit;
  if (s == "delete") return EditMode::kDelete;
  if (s == "complete") return EditMode::kComplete;
  throw InputError("unknown mode '" + std::string(s) + "' (expected edit, delete or complete)");
}

ColoredDigraph apply_edit(const ColoredDigraph& g, const EditSet& f) {
  const int n = g.size();
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : g.arc_indices()) adj[static_cast<std::size_t>(u) * n + v] = 1;
  auto cell = [&](const Arc& a) -> char& {
    const int u = g.vertex(a.first), v = g.vertex(a.second);
    if (u == v) throw InputError("edit: self-loop at '" + a.first + "'");
    return adj[static_cast<std::size_t>(u) * n + v];
  };
  for (const auto& a : f.remove) {
    char& c = cell(a);
    if (!c) throw InputError("edit: cannot delete missing arc (" + a.first + "," + a.second + ")");
    c = 0;
  }
  for (const auto& a : f.insert) {
    char& c = cell(a);
    if (c) throw InputError("edit: cannot insert existing arc (" + a.first + "," + a.second + ")");
    c = 1;
  }
  std::vector<Vertex> vs;
  vs.reserve(n);
  for (int v = 0; v < n; ++v) vs.push_back({g.id(v), g.color(v)});
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (adj[static_cast<std::size_t>(u) * n + v]) arcs.emplace_back(u, v);
  return ColoredDigraph(std::move(vs), std::span<const std::pair<int, int>>(arcs));
}

bool fits_mode(const EditSet& f, EditMode mode) {
  if (mode == EditMode::kDelete) return f.insert.empty();
  if (mode == EditMode::kComplete) return f.remove.empty();
  return true;
}

std::string to_json(const EditSet& f, int indent) {
  nlohmann::ordered_json j;
  auto arcs = [](const std::vector<Arc>& xs) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& [u, v] : xs) a.push_back({u, v});
    return a;
  };
  j["insert"] = arcs(f.insert);
  j["delete"] = arcs(f.remove);
  return j.dump(indent);
}

EditSet edit_set_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("edit json: ") + e.what());
  }
  if (!j.is_object()) throw InputError("edit json: expected an object");
  EditSet f;
  auto read = [&](const char* key, std::vector<Arc>& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_array()) throw InputError(std::string("edit json: '") + key + "' must be an array");
    for (const auto& a : j[key]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
        throw InputError("edit json: each arc is a pair of vertex ids");
      out.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
    }
    std::sort(out.begin(), out.end());
  };
  read("insert", f.insert);
  read("delete", f.remove);
  return f;
}

std::optional<EditResult> brute_force_edit(const ColoredDigraph& g, EditMode mode, int k_max) {
  const int n = g.size();
  if (n > kBruteForceMaxVertices)
    throw InputError("brute_force_edit: at most " + std::to_string(kBruteForceMaxVertices) + " vertices");
  if (k_max < 0) throw InputError("brute_force_edit: k_max must be non-negative");
  if (!g.is_properly_colored()) throw InputError("brute_force_edit: graph is not properly colored");

  // Candidate modifications in lexicographic order; same-colored pairs never
  // help since the result must stay properly colored.
  std::vector<std::pair<int, int>> cand;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || g.color_index(u) == g.color_index(v)) continue;
      const bool present = g.has_arc(u, v);
      if ((mode == EditMode::kDelete && !present) || (mode == EditMode::kComplete && present)) continue;
      cand.emplace_back(u, v);
    }
  const int c = static_cast<int>(cand.size());

  std::vector<Vertex> vs;
  for (int v = 0; v < n; ++v) vs.push_back({g.id(v), g.color(v)});
  const auto base = g.arc_indices();

  for (int k = 0; k <= std::min(k_max, c); ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
      for (auto [u, v] : base) adj[static_cast<std::size_t>(u) * n + v] = 1;
      for (int i : pick) adj[static_cast<std::size_t>(cand[i].first) * n + cand[i].second] ^= 1;
      std::vector<std::pair<int, int>> arcs;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (adj[static_cast<std::size_t>(u) * n + v]) arcs.emplace_back(u, v);
      ColoredDigraph h(vs, std::span<const std::pair<int, int>>(arcs));
      if (binary_explaining_tree(h).ok()) {
        EditResult res;
        res.k = k;
        for (int i : pick) {
          Arc a{g.id(cand[i].first), g.id(cand[i].second)};
          (g.has_arc(cand[i].first, cand[i].second) ? res.edits.remove : res.edits.insert).push_back(a);
        }
        return res;
      }
      // Next k-combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && pick[i] == c - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace bmg
