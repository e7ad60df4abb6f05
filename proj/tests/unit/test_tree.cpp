#include <doctest.h>

#include <set>

#include "bmg/error.hpp"
#include "bmg/newick.hpp"
#include "bmg/tree.hpp"
#include "bmg/triples.hpp"
#include "support/fixtures.hpp"

using namespace bmg;

TEST_CASE("lca") {
  auto t = parse_newick("((a,b),c);");
  std::vector<std::string> ab{"a", "b"}, ac{"a", "c"}, a{"a"}, bad{"a", "zz"};
  CHECK(lca(t, ab) == t.parent(t.leaf("a")));
  CHECK(lca(t, ac) == t.root());
  CHECK(lca(t, a) == t.leaf("a"));
  CHECK_THROWS_AS(lca(t, bad), InputError);

  auto twin = parse_newick("((a1,b1),(a2,b2));");
  std::vector<std::string> q{"a1", "b2"};
  CHECK(lca(twin, q) == twin.root());
}

TEST_CASE("displays") {
  auto t = parse_newick("((a,b),c);");
  CHECK(displays(t, "a", "b", "c"));
  CHECK(displays(t, "b", "a", "c"));
  CHECK_FALSE(displays(t, "a", "c", "b"));
  CHECK_FALSE(displays(parse_newick("(a,b,c);"), "a", "b", "c"));
  CHECK_THROWS_AS(displays(t, "a", "b", "q"), InputError);
}

TEST_CASE("all_triples") {
  CHECK(all_triples(parse_newick("(a,b,c);")).empty());
  CHECK(all_triples(parse_newick("((a,b),c);")).to_strings() == std::vector<std::string>{"ab|c"});
  auto r = all_triples(parse_newick("((a1,b1),(a2,b2));")).to_strings();
  std::set<std::string> got(r.begin(), r.end());
  CHECK(got == std::set<std::string>{"a1b1|a2", "a1b1|b2", "a2b2|a1", "a2b2|b1"});
  CHECK(all_triples(parse_newick("(a,b);")).empty());
}

TEST_CASE("restrict") {
  std::vector<std::array<std::string, 3>> one{{"a", "b", "c"}};
  auto ts = make_triple_set({"a", "b", "c"}, one);
  std::vector<std::string> abc{"a", "b", "c"}, ab{"a", "b"};
  CHECK(restrict(ts, abc).to_strings() == std::vector<std::string>{"ab|c"});
  CHECK(restrict(ts, ab).empty());
  CHECK(restrict(ts, ab).universe() == ab);

  std::vector<std::array<std::string, 3>> example{
      {"a2", "b1", "a1"}, {"a2", "b1", "a3"}, {"a2", "b1", "b2"}, {"a1", "b1", "b2"}};
  auto r = make_triple_set({"a1", "a2", "a3", "b1", "b2"}, example);
  std::vector<std::string> sub{"a1", "a2", "b1"};
  CHECK(restrict(r, sub).to_strings() == std::vector<std::string>{"a2b1|a1"});
}

TEST_CASE("is_refinement") {
  auto cherry = parse_newick("((a,b),c);");
  auto star = parse_newick("(a,b,c);");
  CHECK(is_refinement(cherry, cherry));
  CHECK(is_refinement(cherry, star));
  CHECK_FALSE(is_refinement(star, cherry));
  CHECK_FALSE(is_refinement(cherry, parse_newick("((a,b),d);")));
}

TEST_CASE("binary_refine follows the caterpillar rule") {
  auto bin = parse_newick("((a,b),(c,d));");
  CHECK(binary_refine(bin) == bin);
  CHECK(to_newick(binary_refine(parse_newick("(a,b,c);"))) == "((a,b),c);");
  CHECK(to_newick(binary_refine(parse_newick("(d,c,b,a);"))) == "(((a,b),c),d);");
  CHECK(to_newick(binary_refine(parse_newick("((e,f,g),a,b);"))) == "((a,b),((e,f),g));");
}

TEST_CASE("resolution") {
  CHECK(resolution(parse_newick("(a,b,c,d);")) == 0.0);
  CHECK(resolution(parse_newick("((a,b),(c,d));")) == 1.0);
  CHECK(resolution(parse_newick("(((a,b),c),d);")) == 1.0);
  CHECK(resolution(parse_newick("((a,b),c,d,e);")) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(resolution(parse_newick("(a,b);")), InputError);
}

TEST_CASE("contract and suppress") {
  auto t = parse_newick("((a,b),c);");
  std::vector<NodeId> inner{t.parent(t.leaf("a"))};
  CHECK(to_newick(contract_edges(t, inner)) == "(a,b,c);");
  CHECK(contract_edges(t, {}) == t);
  std::vector<NodeId> leaf{t.leaf("a")};
  CHECK_THROWS_AS(contract_edges(t, leaf), InputError);
  std::vector<NodeId> root{t.root()};
  CHECK_THROWS_AS(contract_edges(t, root), InputError);

  RawTree raw;
  auto a = raw.add_leaf("a"), b = raw.add_leaf("b");
  auto cherry = raw.add_inner({a, b});
  auto v = raw.add_inner({cherry});
  raw.root = raw.add_inner({v});
  CHECK(to_newick(suppress_unary(raw)) == "(a,b);");
}

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(parse_newick("((a),b);"), InputError);
  CHECK_THROWS_AS(parse_newick("(a,a);"), InputError);
  CHECK_THROWS_AS(parse_newick("(a,b)"), InputError);
  CHECK(to_newick(parse_newick(" ( (b:1.5, a)x:2 , c ) root ;")) == "((a,b),c);");
}

TEST_CASE("newick and color round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto t = fixtures::random_tree(rng, 3 + i % 9, 3, i % 2 == 0);
    auto back = with_colors(parse_newick(to_newick(t)), parse_color_tsv(to_color_tsv(t)));
    CHECK(back == t);
  }
  auto t = parse_newick("(a,b);");
  ColorMap partial{{"a", "A"}};
  CHECK_THROWS_WITH_AS(with_colors(t, partial), "no color given for leaf 'b'", InputError);
}

namespace {

// All phylogenetic trees on `labels` by inserting leaves one at a time at
// every vertex or edge; used here only as an independent check of the
// partial-order properties.
std::vector<std::string> trees_by_insertion(const std::vector<std::string>& labels) {
  std::vector<std::string> cur{"(" + labels[0] + "," + labels[1] + ");"};
  for (std::size_t k = 2; k < labels.size(); ++k) {
    std::set<std::string> next;
    for (const auto& nwk : cur) {
      auto t = parse_newick(nwk);
      for (NodeId u = 0; u < static_cast<NodeId>(t.size()); ++u) {
        // Attach as a new child of an inner vertex.
        if (!t.is_leaf(u)) {
          RawTree raw = t.to_raw();
          auto leaf = raw.add_leaf(labels[k]);
          raw.nodes[leaf].parent = u;
          raw.nodes[u].children.push_back(leaf);
          next.insert(to_newick(LeafColoredTree(raw)));
        }
        // Subdivide the edge above u (or above the root).
        RawTree raw = t.to_raw();
        auto leaf = raw.add_leaf(labels[k]);
        const NodeId p = raw.nodes[u].parent;
        auto mid = raw.add_inner({u, leaf});
        if (p == kNoNode) {
          raw.root = mid;
        } else {
          for (auto& c : raw.nodes[p].children)
            if (c == u) c = mid;
          raw.nodes[mid].parent = p;
        }
        next.insert(to_newick(LeafColoredTree(raw)));
      }
    }
    cur.assign(next.begin(), next.end());
  }
  return cur;
}

}  // namespace

TEST_CASE("refinement is a partial order on all trees with up to five leaves") {
  std::vector<std::string> labels{"a", "b", "c", "d", "e"};
  for (std::size_t n = 3; n <= 5; ++n) {
    std::vector<std::string> sub(labels.begin(), labels.begin() + static_cast<long>(n));
    std::vector<LeafColoredTree> trees;
    for (const auto& s : trees_by_insertion(sub)) trees.push_back(parse_newick(s));
    const std::size_t expected[] = {0, 0, 0, 4, 26, 236};
    REQUIRE(trees.size() == expected[n]);
    const auto m = trees.size();
    std::vector<char> le(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) le[i * m + j] = is_refinement(trees[i], trees[j]);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(le[i * m + i]);
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && le[i * m + j]) CHECK_FALSE(le[j * m + i]);
        if (!le[i * m + j]) continue;
        for (std::size_t k = 0; k < m; ++k)
          if (le[j * m + k]) CHECK(le[i * m + k]);
      }
    }
  }
}

TEST_CASE("triples displayed by trees") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 60; ++it) {
    auto t = fixtures::random_tree(rng, 3 + it % 8, 2, it % 3 == 0);
    auto r = all_triples(t);
    CHECK(r.has_at_most_one_per_subset());
    if (t.is_binary()) CHECK(r.is_strictly_dense());
    auto ref = binary_refine(t);
    CHECK(ref.is_binary());
    CHECK(is_refinement(ref, t));
    CHECK(displays_all(ref, r));
    CHECK(resolution(ref) == 1.0);
    // Exactly one triple per 3-subset whose two lcas differ.
    const auto labels = t.leaf_labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        for (std::size_t k = j + 1; k < labels.size(); ++k) {
          const NodeId a = t.leaf(labels[i]), b = t.leaf(labels[j]), c = t.leaf(labels[k]);
          std::set<NodeId> lcas{t.lca(a, b), t.lca(a, c), t.lca(b, c)};
          const int shown = r.contains(labels[i], labels[j], labels[k]) +
                            r.contains(labels[i], labels[k], labels[j]) +
                            r.contains(labels[j], labels[k], labels[i]);
          CHECK(shown == (lcas.size() == 2 ? 1 : 0));
        }
  }
}
