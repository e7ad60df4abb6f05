#include <doctest.h>

#include <functional>
#include <set>

#include "bmg/error.hpp"
#include "bmg/graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracle_bmg.hpp"

using namespace bmg;

namespace {

std::set<std::string> strings(const TripleSet& ts) {
  auto v = ts.to_strings();
  return {v.begin(), v.end()};
}

std::set<Arc> arc_set(const ColoredDigraph& g) {
  auto a = g.arcs();
  return {a.begin(), a.end()};
}

}  // namespace

TEST_CASE("bmg_from_tree on fixtures") {
  CHECK(bmg_from_tree(fixtures::colored("((a1,b1),(a2,b2));")) == fixtures::twin_cherry());
  CHECK(bmg_from_tree(fixtures::colored("((x1,x2),(y1,y2));")) == fixtures::biclique());
  CHECK(bmg_from_tree(fixtures::colored("(x1,(x2,y2),y1);")) == fixtures::hourglass());
  auto single = bmg_from_tree(fixtures::colored("(a,b);"));
  CHECK(single.arc_count() == 2);
}

TEST_CASE("bmg_from_tree matches the definition") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 300; ++it) {
    auto t = fixtures::random_tree(rng, 2 + it % 14, 1 + it % 4, it % 2 == 0);
    auto g = bmg_from_tree(t);
    CHECK(g == oracle::bmg_by_definition(t));
    CHECK(is_sf_colored(g));
  }
}

TEST_CASE("sf coloring") {
  CHECK(is_sf_colored(fixtures::graph({{"a", "A"}, {"b", "B"}}, {{"a", "b"}, {"b", "a"}})));
  CHECK_FALSE(is_sf_colored(fixtures::graph({{"a", "A"}, {"b", "B"}}, {{"a", "b"}})));
  CHECK(is_sf_colored(fixtures::hourglass()));
  CHECK(is_sf_colored(fixtures::graph({{"a", "A"}}, {})));
  CHECK_FALSE(is_sf_colored(fixtures::graph({{"a", "A"}, {"b", "A"}}, {{"a", "b"}})));
}

TEST_CASE("informative, forbidden and Rbin triples") {
  auto twin = fixtures::twin_cherry();
  CHECK(strings(informative_triples(twin)) ==
        std::set<std::string>{"a1b1|b2", "a1b1|a2", "a2b2|b1", "a2b2|a1"});
  CHECK(forbidden_triples(twin).empty());
  CHECK(rbin_triples(twin) == informative_triples(twin));

  auto hg = fixtures::hourglass();
  CHECK(strings(informative_triples(hg)) == std::set<std::string>{"x2y2|y1", "x2y2|x1"});
  CHECK(strings(forbidden_triples(hg)) ==
        std::set<std::string>{"x1y1|y2", "x1y2|y1", "x1y1|x2", "x2y1|x1"});
  CHECK(strings(rbin_triples(hg)) == std::set<std::string>{"x2y2|y1", "x2y2|x1", "y1y2|x1", "x1x2|y1"});

  auto rb = fixtures::rainbow_triangle();
  CHECK(informative_triples(rb).empty());
  CHECK(forbidden_triples(rb).empty());
  CHECK(rbin_triples(rb).empty());

  auto bad = fixtures::graph({{"a", "A"}, {"b", "A"}}, {{"a", "b"}});
  CHECK_THROWS_AS(informative_triples(bad), InputError);
  CHECK_THROWS_AS(rbin_triples(bad), InputError);
}

TEST_CASE("induced subgraphs") {
  auto hg = fixtures::hourglass();
  CHECK(induced_subgraph(hg, hg.ids()) == hg);
  std::vector<std::string> xy{"x1", "y1"}, xx{"x1", "x2"}, bad{"q"};
  CHECK(arc_set(induced_subgraph(hg, xy)) == std::set<Arc>{{"x1", "y1"}, {"y1", "x1"}});
  auto iso = induced_subgraph(hg, xx);
  CHECK(iso.size() == 2);
  CHECK(iso.arc_count() == 0);
  CHECK_THROWS_AS(induced_subgraph(hg, bad), InputError);
}

TEST_CASE("triple extraction properties on random graphs") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 200; ++it) {
    const int n = 3 + it % 6;
    auto g = fixtures::random_graph(rng, n, 1 + it % 4, it % 2 ? 0.6 : 0.9);
    auto r = informative_triples(g), f = forbidden_triples(g), rb = rbin_triples(g);
    // Forbidden triples come in pairs.
    for (const auto& t : f.triples()) {
      const int a = t.a, b = t.b, c = t.c;
      const bool a_is_pivot = g.color_index(a) != g.color_index(c);
      const int pivot = a_is_pivot ? a : b, other = a_is_pivot ? b : a;
      CHECK(f.contains(Triple::make(pivot, c, other)));
    }
    // Restriction commutes with taking induced subgraphs.
    std::vector<std::string> keep;
    for (int v = 0; v < n; ++v)
      if (std::bernoulli_distribution(0.6)(rng)) keep.push_back(g.id(v));
    auto h = induced_subgraph(g, keep);
    CHECK(restrict(r, keep) == informative_triples(h));
    CHECK(restrict(f, keep) == forbidden_triples(h));
    CHECK(restrict(rb, keep) == rbin_triples(h));
    // R and F both empty exactly when Rbin is; for sf-colored graphs exactly
    // when colors are all distinct or all equal.
    const bool degenerate = g.color_count() == 1 || g.color_count() == n;
    CHECK((r.empty() && f.empty()) == rb.empty());
    if (is_sf_colored(g)) CHECK(rb.empty() == degenerate);
  }
}

TEST_CASE("BMGs of subtrees are induced subgraphs") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 80; ++it) {
    auto t = fixtures::random_tree(rng, 3 + it % 8, 1 + it % 3, it % 2 == 1);
    auto g = bmg_from_tree(t);
    for (NodeId u = 0; u < static_cast<NodeId>(t.size()); ++u) {
      if (t.is_leaf(u) || u == t.root()) continue;
      std::vector<std::string> keep;
      for (int r : t.cluster(u)) keep.push_back(t.label(t.leaves()[r]));
      RawTree raw;
      std::function<NodeId(NodeId)> copy = [&](NodeId v) -> NodeId {
        if (t.is_leaf(v)) return raw.add_leaf(t.label(v), t.color(v));
        std::vector<NodeId> kids;
        for (NodeId c : t.children(v)) kids.push_back(copy(c));
        return raw.add_inner(std::move(kids));
      };
      raw.root = copy(u);
      CHECK(bmg_from_tree(LeafColoredTree(std::move(raw))) == induced_subgraph(g, keep));
    }
  }
}

TEST_CASE("graph serialization") {
  auto hg = fixtures::hourglass();
  CHECK(graph_from_json(to_json(hg)) == hg);
  CHECK(to_json(fixtures::graph({{"b", "B"}, {"a", "A"}}, {{"b", "a"}, {"a", "b"}})) ==
        R"({"vertices":[{"id":"a","color":"A"},{"id":"b","color":"B"}],"arcs":[["a","b"],["b","a"]]})");
  CHECK_THROWS_AS(graph_from_json("{"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices":[{"id":"a","color":"A"}],"arcs":[["a","z"]]})"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices":[{"id":"a","color":"A"}],"arcs":[["a","a"]]})"), InputError);
  ColorMap colors{{"a", "A"}, {"b", "B"}};
  CHECK(graph_from_tsv("a\tb\nb\ta\n", colors) == fixtures::graph({{"a", "A"}, {"b", "B"}}, {{"a", "b"}, {"b", "a"}}));
}
