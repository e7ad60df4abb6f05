#include <doctest.h>

#include <cmath>
#include <set>

#include "bmg/build.hpp"
#include "bmg/error.hpp"
#include "bmg/graph.hpp"
#include "bmg/newick.hpp"
#include "bmg/recognition.hpp"
#include "bmg/simulation.hpp"

using namespace bmg;

namespace {

bool is_descendant(const LeafColoredTree& t, NodeId v, NodeId anc) {
  for (; v != kNoNode; v = t.parent(v))
    if (v == anc) return true;
  return false;
}

void check_scenario(const Scenario& sc) {
  const auto& S = sc.species;
  const auto& g = sc.gene;
  REQUIRE(sc.gene_species.size() == g.nodes.size());
  // Times strictly decrease from parent to child, except speciations and
  // leaves whose time is pinned to the species vertex.
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const auto& node = g.nodes[v];
    REQUIRE(node.time);
    if (node.parent != kNoNode) CHECK(*g.nodes[node.parent].time > *node.time);
    if (node.event == Event::kLeaf) {
      CHECK(*node.time == 0.0);
      CHECK(S.is_leaf(sc.gene_species[v]));
      CHECK(node.color == S.label(sc.gene_species[v]));
    }
    if (node.event == Event::kSpeciation) {
      CHECK(node.children.size() == S.children(sc.gene_species[v]).size());
    }
    if (node.event == Event::kDuplication || node.event == Event::kTransfer) CHECK(node.children.size() == 2);
    if (node.event == Event::kLoss) CHECK(node.children.empty());
  }
  // Every species edge carries a gene with extant descendants.
  std::vector<char> extant_below(g.nodes.size(), 0);
  for (std::size_t v = g.nodes.size(); v-- > 0;) {
    if (g.nodes[v].event == Event::kLeaf) extant_below[v] = 1;
    for (NodeId c : g.nodes[v].children) extant_below[v] |= extant_below[c];
  }
  std::vector<char> covered(S.size(), 0);
  for (std::size_t v = 0; v < g.nodes.size(); ++v)
    if (extant_below[v] && (g.nodes[v].event == Event::kSpeciation || g.nodes[v].event == Event::kLeaf))
      covered[sc.gene_species[v]] = 1;
  for (NodeId c = 0; c < static_cast<NodeId>(S.size()); ++c)
    if (c != S.root()) CHECK(covered[c]);

  const auto& T = sc.observable;
  CHECK(T.is_binary());
  CHECK(!T.planted());
  for (NodeId leaf : T.leaves()) CHECK(S.find_leaf(T.color(leaf)));
  std::set<std::string> colors;
  for (NodeId leaf : T.leaves()) colors.insert(T.color(leaf));
  CHECK(colors.size() == S.leaf_count());
}

}  // namespace

TEST_CASE("rng and seeds") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  Rng c(1);
  std::vector<int> hist(5, 0);
  for (int i = 0; i < 5000; ++i) ++hist[c.below(5)];
  for (int h : hist) CHECK(h > 800);
  double sum = 0;
  for (int i = 0; i < 20000; ++i) sum += c.exponential(4.0);
  CHECK(std::abs(sum / 20000 - 0.25) < 0.01);
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
}

TEST_CASE("innovation species trees") {
  const auto two = innovation_species_tree(2, 5);
  CHECK(two.planted());
  CHECK(two.leaf_count() == 2);
  CHECK(two.size() == 4);
  CHECK_THROWS_AS(innovation_species_tree(1, 5), InputError);

  const auto t30 = innovation_species_tree(30, 11);
  CHECK(t30.leaf_count() == 30);
  CHECK(t30.size() == 30 + 29 + 1);
  CHECK(t30.label(t30.leaves().front()) == "S00");
  for (NodeId v = 0; v < static_cast<NodeId>(t30.size()); ++v) {
    REQUIRE(t30.node(v).time);
    if (v == t30.root()) {
      CHECK(*t30.node(v).time == 1.0);
      CHECK(t30.children(v).size() == 1);
    } else {
      CHECK(*t30.node(t30.parent(v)).time > *t30.node(v).time);
      if (t30.is_leaf(v)) CHECK(*t30.node(v).time == 0.0);
      else CHECK(t30.children(v).size() == 2);
    }
  }
  const auto again = innovation_species_tree(10, 3);
  CHECK(to_newick(again) == to_newick(innovation_species_tree(10, 3)));
}

TEST_CASE("zero rates give one gene per species") {
  Rng rng(9);
  const auto S = innovation_species_tree(8, rng);
  const auto sc = simulate_gene_tree(S, {0, 0, 0}, rng);
  check_scenario(sc);
  CHECK(sc.observable.leaf_count() == 8);
  for (const auto& node : sc.gene.nodes)
    CHECK((node.event == Event::kNone || node.event == Event::kSpeciation || node.event == Event::kLeaf));
  const auto g = bmg_from_tree(sc.observable);
  CHECK(g.arc_count() == 8 * 7);  // complete multipartite with singleton classes
  CHECK(resolution(lrt(g)) == 0.0);
}

TEST_CASE("scenario invariants") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed);
    const int n = 3 + static_cast<int>(seed % 12);
    const auto S = innovation_species_tree(n, rng);
    const Rates rates = seed % 3 == 0 ? Rates{1.0, 0.5, 0.0} : seed % 3 == 1 ? Rates{1, 1, 0.2} : Rates{1, 0.5, 0.5};
    const auto sc = simulate_gene_tree(S, rates, rng);
    CAPTURE(seed);
    check_scenario(sc);
    if (rates.hgt == 0)
      for (const auto& node : sc.gene.nodes) CHECK(node.event != Event::kTransfer);

    const auto g = bmg_from_tree(sc.observable);
    const auto ex = binary_explaining_tree(g);
    CHECK(ex.ok());
    const auto l = lrt(g), b = brt(g);
    if (sc.observable.leaf_count() <= 30) {
      CHECK(is_refinement(sc.observable, b));
      CHECK(is_refinement(sc.observable, l));
      CHECK(is_refinement(b, l));
    }
    if (sc.observable.leaf_count() > 2) {
      CHECK(resolution(l) <= resolution(b));
      CHECK(resolution(b) <= 1.0);
      CHECK(resolution(sc.observable) == 1.0);
    }
  }
}

TEST_CASE("prune_observable") {
  RawTree raw;
  const NodeId a = raw.add_leaf("a", "A"), lost = raw.add_leaf("");
  raw.nodes[lost].event = Event::kLoss;
  const NodeId b = raw.add_leaf("b", "B"), c = raw.add_leaf("c", "C");
  const NodeId dup = raw.add_inner({a, lost});
  const NodeId bc = raw.add_inner({b, c});
  const NodeId top = raw.add_inner({dup, bc});
  raw.root = raw.add_inner({top});
  CHECK(to_newick(prune_observable(raw)) == to_newick(parse_newick("(a,(b,c));")));
  RawTree dead;
  dead.root = dead.add_leaf("");
  dead.nodes[0].event = Event::kLoss;
  CHECK_THROWS_AS(prune_observable(dead), InputError);
}

TEST_CASE("quartiles") {
  const auto s = summarize({4, 1, 3, 2});
  CHECK(s.count == 4);
  CHECK(s.min == 1);
  CHECK(s.max == 4);
  CHECK(s.q1 == doctest::Approx(1.75));
  CHECK(s.median == doctest::Approx(2.5));
  CHECK(s.q3 == doctest::Approx(3.25));
  CHECK(summarize({7}).median == 7);
  CHECK(summarize({}).count == 0);
}

TEST_CASE("experiment rows and csv") {
  ExperimentConfig cfg;
  cfg.min_species = 4;
  cfg.max_species = 8;
  cfg.grid = {{0, 0, 0}, {1, 0.5, 0.5}};
  cfg.replicates = 3;
  cfg.seed = 7;
  const auto rows = run_experiment(cfg);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].rate_index == 0);
  CHECK(rows[5].replicate == 2);
  for (const auto& r : rows) {
    CHECK(r.n_species >= 4);
    CHECK(r.n_species <= 8);
    CHECK(r.res_lrt <= r.res_brt);
    if (r.rate_index == 0) {
      CHECK(r.n_genes == r.n_species);
      CHECK(!r.ratio);
    }
  }
  const auto csv = to_csv(rows);
  CHECK(csv == to_csv(run_experiment(cfg)));
  CHECK(csv.rfind("rate_dup,rate_loss,rate_hgt,n_species,replicate,n_genes,res_lrt,res_brt,ratio\n0,0,0,", 0) == 0);
  // A zero-rate row ends in an empty ratio cell.
  const auto second = csv.substr(csv.find('\n') + 1);
  CHECK(second.substr(0, second.find('\n')).back() == ',');
  cfg.seed = 8;
  CHECK(csv != to_csv(run_experiment(cfg)));

  const auto sums = summarize_by_rate(rows);
  REQUIRE(sums.size() == 2);
  CHECK(sums[0].ratio.count == 0);
  CHECK(gnuplot_script(sums, "out.png").find("candlesticks") != std::string::npos);

  cfg.min_species = 2;
  CHECK_THROWS_AS(run_experiment(cfg), InputError);
}
