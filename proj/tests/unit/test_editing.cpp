#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "bmg/build.hpp"
#include "bmg/editing.hpp"
#include "bmg/error.hpp"
#include "bmg/ilp.hpp"
#include "bmg/newick.hpp"
#include "bmg/oracles.hpp"
#include "support/fixtures.hpp"

using namespace bmg;

namespace {

// Independent of binary_explaining_tree and of the ILP: the smallest arc distance to the BMG
// of any binary tree on the vertex set, subject to the mode.
std::optional<int> tree_oracle_distance(const ColoredDigraph& g, EditMode mode) {
  ColorMap colors;
  for (int v = 0; v < g.size(); ++v) colors[g.id(v)] = g.color(v);
  std::optional<int> best;
  for_each_tree(g.ids(), [&](const LeafColoredTree& t) {
    if (!t.is_binary()) return;
    const auto h = bmg_from_tree(with_colors(t, colors));
    int ins = 0, del = 0;
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y) {
        if (x == y) continue;
        if (h.has_arc(x, y) && !g.has_arc(x, y)) ++ins;
        if (!h.has_arc(x, y) && g.has_arc(x, y)) ++del;
      }
    if (mode == EditMode::kDelete && ins > 0) return;
    if (mode == EditMode::kComplete && del > 0) return;
    if (!best || ins + del < *best) best = ins + del;
  });
  return best;
}

std::vector<ColoredDigraph> small_graphs() {
  std::vector<ColoredDigraph> out = {fixtures::hourglass(), fixtures::twin_cherry(), fixtures::rainbow_triangle(),
                                     fixtures::biclique()};
  std::mt19937_64 rng(20261014);
  while (out.size() < 60) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    auto g = fixtures::random_graph(rng, n, std::uniform_int_distribution<int>(2, 3)(rng),
                                    std::uniform_real_distribution<double>(0.2, 0.9)(rng));
    if (g.color_count() >= 2) out.push_back(std::move(g));
  }
  return out;
}

constexpr EditMode kModes[] = {EditMode::kEdit, EditMode::kDelete, EditMode::kComplete};

}  // namespace

TEST_CASE("ilp model size on the hourglass") {
  const auto m = build_ilp(fixtures::hourglass(), EditMode::kEdit);
  CHECK(m.arc_variable_count() == 12);
  CHECK(m.triple_variable_count() == 12);
  CHECK(m.variables.size() == 24);
  CHECK(m.count(Family::kMode) == 0);
  CHECK(m.count(Family::kProper) == 4);
  CHECK(m.count(Family::kSinkFree) == 4);
  CHECK(m.count(Family::kInformative) == 8);
  CHECK(m.count(Family::kForbidden) == 4);
  CHECK(m.count(Family::kDense) == 4);
  CHECK(m.count(Family::kInference) == 24);
  CHECK(m.objective_constant == 6);
  CHECK(m.objective.size() == 12);

  const auto d = build_ilp(fixtures::hourglass(), EditMode::kDelete);
  CHECK(d.count(Family::kMode) == 12);
  CHECK(d.constraints.size() == m.constraints.size() + 12);
}

TEST_CASE("ilp inference rows: 24 distinct rows per 4-subset") {
  std::vector<Vertex> vs;
  for (int i = 0; i < 6; ++i) vs.push_back({"v" + std::to_string(i), i % 2 ? "A" : "B"});
  const ColoredDigraph g(vs, std::span<const Arc>{});
  const auto m = build_ilp(g, EditMode::kEdit);
  CHECK(m.count(Family::kInference) == 24 * 15);
  CHECK(m.count(Family::kDense) == 20);
  std::set<std::vector<LinearTerm>> rows;
  for (std::size_t i = 0; i < m.constraints.size(); ++i)
    if (m.families[i] == Family::kInference) {
      const auto& c = m.constraints[i];
      CHECK(c.terms.size() == 4);
      CHECK(c.rhs == 2);
      int pos = 0;
      for (auto t : c.terms) pos += t.coef == 2;
      CHECK(pos == 2);
      rows.insert(c.terms);
    }
  CHECK(rows.size() == 24 * 15);
}

TEST_CASE("ilp rejects bad inputs") {
  CHECK_THROWS_AS(build_ilp(fixtures::graph({{"a", "A"}, {"b", "A"}}, {}), EditMode::kEdit), InputError);
  CHECK_THROWS_AS(build_ilp(fixtures::graph({{"a b", "A"}, {"c", "B"}}, {}), EditMode::kEdit), InputError);
  // e_a_b_c would name both (a_b, c) and (a, b_c).
  CHECK_THROWS_AS(
      build_ilp(fixtures::graph({{"a_b", "A"}, {"c", "B"}, {"a", "B"}, {"b_c", "A"}}, {}), EditMode::kEdit),
      InputError);
}

TEST_CASE("lp export round trip") {
  for (const auto& g : small_graphs())
    for (auto mode : kModes) {
      const auto m = build_ilp(g, mode);
      const auto text = export_lp(m);
      std::istringstream lines(text);
      for (std::string line; std::getline(lines, line);) CHECK(line.size() <= 100);
      const auto p = parse_lp(text);
      CHECK(p.variables == m.variables);
      CHECK(p.objective == m.objective);
      CHECK(p.objective_constant == m.objective_constant);
      CHECK(p.constraints == m.constraints);
      CHECK(export_lp(p) == text);
    }
}

TEST_CASE("lp parser") {
  const auto m = parse_lp(
      "\\ comment\nMinimize\n obj: 3 + x - 2 y\nSubject To\n c1: x + y >= 1\n c2: x\n  - y <= 0\n"
      " c3: x = 1\nBinary\n x y\nEnd\n");
  CHECK(m.variables == std::vector<std::string>{"x", "y"});
  CHECK(m.objective_constant == 3);
  REQUIRE(m.constraints.size() == 3);
  CHECK(m.constraints[1].terms == std::vector<LinearTerm>{{0, 1}, {1, -1}});
  const auto s = solve_exhaustive(m);
  REQUIRE(s);
  CHECK(s->objective == 2);
  CHECK(s->values == std::vector<char>{1, 1});

  auto line_of = [](const std::string& text) {
    try {
      parse_lp(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(line_of("Minimize\n obj: x\nSubject To\n c1: x + z >= 1\nBinary\n x\nEnd\n").find("line 4") !=
        std::string::npos);
  CHECK(line_of("Minimize\n obj: x\nSubject To\n c1: x >= 1.5\nBinary\n x\nEnd\n").find("line 4") !=
        std::string::npos);
  CHECK(line_of("Minimize\n obj: x\nSubject To\n c1: x >= 1\nBinary\n x\n") != "");
  CHECK(line_of("Maximize\n obj: x\nSubject To\nBinary\n x\nEnd\n").find("line 1") != std::string::npos);
  CHECK(line_of("Minimize\n obj: x\nSubject To\n c1: x ? 1\nBinary\n x\nEnd\n") != "");
}

TEST_CASE("exhaustive solver agrees with enumeration") {
  const auto m = parse_lp(
      "Minimize\n obj: a + b + c + d\nSubject To\n r1: a + b >= 1\n r2: b + c >= 1\n r3: c + d >= 1\n"
      " r4: a + d >= 1\n r5: a + c <= 1\nBinary\n a b c d\nEnd\n");
  int best = 100, feasible = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<char> v{char(mask & 1), char(mask >> 1 & 1), char(mask >> 2 & 1), char(mask >> 3 & 1)};
    if (is_feasible(m, v)) {
      ++feasible;
      best = std::min(best, evaluate(m, v));
    }
  }
  int counted = 0;
  for_each_feasible(m, [&](const std::vector<char>& v) {
    CHECK(is_feasible(m, v));
    ++counted;
  });
  CHECK(counted == feasible);
  const auto s = solve_exhaustive(m);
  REQUIRE(s);
  CHECK(s->objective == best);
  CHECK(!solve_exhaustive(parse_lp("Minimize\n obj: a\nSubject To\n r: a + b >= 3\nBinary\n a b\nEnd\n")));
}

TEST_CASE("ilp feasible set is exactly the binary-explainable BMGs") {
  // Every feasible point decodes to a binary-explainable BMG with a strictly
  // dense consistent triple set containing its Rbin, and every binary tree's
  // BMG with its full triple set is feasible.
  for (const auto& g : {fixtures::hourglass(), fixtures::twin_cherry(), fixtures::rainbow_triangle()}) {
    const auto m = build_ilp(g, EditMode::kEdit);
    std::set<std::string> graphs;
    for_each_feasible(m, [&](const std::vector<char>& v) {
      const auto h = decode_graph(m, g, v);
      const auto ts = decode_triples(m, v);
      CHECK(binary_explaining_tree(h).ok());
      CHECK(ts.is_strictly_dense());
      CHECK(build(ts, g.ids()).ok());
      CHECK(rbin_triples(h).subset_of(ts));
      graphs.insert(to_json(h));
    });
    ColorMap colors;
    for (int x = 0; x < g.size(); ++x) colors[g.id(x)] = g.color(x);
    std::set<std::string> expected;
    for_each_tree(g.ids(), [&](const LeafColoredTree& t) {
      if (!t.is_binary()) return;
      const auto ct = with_colors(t, colors);
      const auto h = bmg_from_tree(ct);
      const auto r = all_triples(ct);
      std::vector<char> v(m.variables.size(), 0);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (m.arc_of[i].first >= 0) v[i] = h.has_arc(m.arc_of[i].first, m.arc_of[i].second);
        else v[i] = r.contains(m.triple_of[i]);
      }
      CHECK(is_feasible(m, v));
      expected.insert(to_json(h));
    });
    CHECK(graphs == expected);
  }
}

TEST_CASE("ilp optimum matches brute force and the tree oracle") {
  for (const auto& g : small_graphs())
    for (auto mode : kModes) {
      CAPTURE(to_json(g));
      CAPTURE(to_string(mode));
      const auto oracle = tree_oracle_distance(g, mode);
      const auto bf = brute_force_edit(g, mode, 12);
      const auto s = solve_exhaustive(build_ilp(g, mode));
      REQUIRE(oracle.has_value() == bf.has_value());
      REQUIRE(oracle.has_value() == s.has_value());
      if (!oracle) continue;
      CHECK(bf->k == *oracle);
      CHECK(s->objective == *oracle);
      const auto fixed = apply_edit(g, bf->edits);
      CHECK(binary_explaining_tree(fixed).ok());
      CHECK(fits_mode(bf->edits, mode));
    }
}

TEST_CASE("editing the hourglass") {
  const auto hg = fixtures::hourglass();
  CHECK(!binary_explaining_tree(hg).ok());
  CHECK(!brute_force_edit(hg, EditMode::kEdit, 0));
  for (auto mode : kModes) {
    const auto r = brute_force_edit(hg, mode, 6);
    REQUIRE(r);
    CHECK(r->k == *tree_oracle_distance(hg, mode));
  }
  // One deletion suffices: without x1->y1 the tree (((x2,y2),x1),y1) explains
  // the graph, so the edit distance is 1 while completion needs 2.
  const auto e = brute_force_edit(hg, EditMode::kEdit, 6);
  CHECK(e->k == 1);
  CHECK(e->edits == EditSet{{}, {{"x1", "y1"}}});
  CHECK(brute_force_edit(hg, EditMode::kDelete, 6)->k == 1);
  CHECK(bmg_from_tree(fixtures::colored("(((x2,y2),x1),y1);")) == apply_edit(hg, e->edits));
  const auto c = brute_force_edit(hg, EditMode::kComplete, 6);
  CHECK(c->k == 2);
  CHECK(c->edits == EditSet{{{"x2", "y1"}, {"y2", "x1"}}, {}});
  CHECK(apply_edit(hg, c->edits) == fixtures::biclique());
  CHECK(!brute_force_edit(hg, EditMode::kComplete, 1));
  for (auto mode : kModes) CHECK(solve_exhaustive(build_ilp(hg, mode))->objective == brute_force_edit(hg, mode, 6)->k);
}

TEST_CASE("apply_edit") {
  const auto hg = fixtures::hourglass();
  EditSet f{{{"y2", "x1"}}, {{"x1", "y2"}}};
  const auto h = apply_edit(hg, f);
  CHECK(h.has_arc(h.index_of("y2"), h.index_of("x1")));
  CHECK(!h.has_arc(h.index_of("x1"), h.index_of("y2")));
  CHECK(apply_edit(h, EditSet{f.remove, f.insert}) == hg);
  CHECK(edit_set_from_json(to_json(f)) == f);
  CHECK(fits_mode(f, EditMode::kEdit));
  CHECK(!fits_mode(f, EditMode::kDelete));
  CHECK(!fits_mode(f, EditMode::kComplete));
  CHECK_THROWS_AS(apply_edit(hg, EditSet{{{"x1", "y1"}}, {}}), InputError);
  CHECK_THROWS_AS(apply_edit(hg, EditSet{{}, {{"y1", "y2"}}}), InputError);
  CHECK_THROWS_AS(apply_edit(hg, EditSet{{{"x1", "x1"}}, {}}), InputError);
  CHECK_THROWS_AS(apply_edit(hg, EditSet{{{"x1", "q"}}, {}}), InputError);
  CHECK(parse_edit_mode("complete") == EditMode::kComplete);
  CHECK_THROWS_AS(parse_edit_mode("merge"), InputError);
}
