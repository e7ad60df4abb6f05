#include "bmg/simulation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

#include "bmg/build.hpp"
#include "bmg/error.hpp"
#include "bmg/graph.hpp"

namespace bmg {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw InputError("rng: empty range");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

double Rng::exponential(double rate) { return -std::log1p(-uniform()) / rate; }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string species_label(int i, int n) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::max<std::size_t>(2, std::to_string(n - 1).size());
  return "S" + std::string(width - std::min(width, digits.size()), '0') + digits;
}

std::string number(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(master) ^ a) ^ b);
}

LeafColoredTree innovation_species_tree(int n, Rng& rng) {
  if (n < 2) throw InputError("species tree: need at least 2 species, got " + std::to_string(n));
  RawTree raw;
  struct Species {
    std::vector<int> features;
    NodeId node;
  };
  std::vector<Species> species;
  {
    std::vector<int> f(kInitialFeatures);
    for (int i = 0; i < kInitialFeatures; ++i) f[i] = i;
    species.push_back({std::move(f), raw.add_leaf("")});
  }
  int next_feature = kInitialFeatures;
  std::vector<NodeId> inner;  // in creation order, hence parents first
  while (static_cast<int>(species.size()) < n) {
    const auto i = rng.below(species.size());
    std::vector<int> proposal = species[i].features;
    if (rng.uniform() < kInnovationProbability) {
      proposal.push_back(next_feature);
    } else {
      proposal.erase(proposal.begin() + static_cast<long>(rng.below(proposal.size())));
      if (proposal.empty()) continue;
      if (std::any_of(species.begin(), species.end(), [&](const Species& s) { return s.features == proposal; }))
        continue;
    }
    if (proposal.size() > species[i].features.size()) ++next_feature;
    const NodeId parent = species[i].node;
    const NodeId a = raw.add_leaf(""), b = raw.add_leaf("");
    raw.nodes[parent].children = {a, b};
    raw.nodes[a].parent = raw.nodes[b].parent = parent;
    inner.push_back(parent);
    species[i].node = a;
    species.push_back({std::move(proposal), b});
  }
  std::vector<double> times(inner.size());
  for (auto& t : times) t = rng.uniform();
  std::sort(times.begin(), times.end(), std::greater<>());
  for (std::size_t k = 0; k < inner.size(); ++k) {
    raw.nodes[inner[k]].time = times[k];
    raw.nodes[inner[k]].event = Event::kSpeciation;
  }
  for (std::size_t i = 0; i < species.size(); ++i) {
    auto& leaf = raw.nodes[species[i].node];
    leaf.label = leaf.color = species_label(static_cast<int>(i), n);
    leaf.time = 0.0;
    leaf.event = Event::kLeaf;
  }
  const NodeId top = inner.front();
  raw.root = raw.add_inner({top});
  raw.nodes[raw.root].time = 1.0;
  return LeafColoredTree(std::move(raw), true);
}

LeafColoredTree innovation_species_tree(int n, std::uint64_t seed) {
  Rng rng(seed);
  return innovation_species_tree(n, rng);
}

Scenario simulate_gene_tree(const LeafColoredTree& species, Rates rates, Rng& rng) {
  for (double r : {rates.dup, rates.loss, rates.hgt})
    if (!(r >= 0) || !std::isfinite(r)) throw InputError("simulation: rates must be finite and non-negative");
  if (!species.planted() || !species.has_times()) throw InputError("simulation: species tree must be planted and dated");
  auto time_of = [&](NodeId v) { return *species.node(v).time; };

  Scenario out{species, RawTree{}, {}, species, rates};
  RawTree& gene = out.gene;
  auto& gs = out.gene_species;
  auto new_node = [&](NodeId parent, double time, Event e, NodeId sp) {
    const auto id = static_cast<NodeId>(gene.nodes.size());
    TreeNode node;
    node.parent = parent;
    node.time = time;
    node.event = e;
    gene.nodes.push_back(std::move(node));
    if (parent != kNoNode) gene.nodes[parent].children.push_back(id);
    gs.push_back(sp);
    return id;
  };

  struct Lineage {
    NodeId parent;
    NodeId edge;
  };
  std::vector<Lineage> active;
  std::vector<int> on_edge(species.size(), 0);
  std::set<std::pair<double, NodeId>> alive;  // (-time of lower end, lower end)
  std::vector<int> extant_count(species.size(), 0);

  gene.root = new_node(kNoNode, time_of(species.root()), Event::kNone, species.root());
  const NodeId first = species.children(species.root()).front();
  active.push_back({gene.root, first});
  on_edge[first] = 1;
  alive.insert({-time_of(first), first});

  const double total = rates.dup + rates.loss + rates.hgt;
  double tau = time_of(species.root());
  int rejections = 0;
  while (!alive.empty()) {
    const auto [neg_next, c] = *alive.begin();
    const double t_next = -neg_next;
    if (total > 0) {
      const double dt = rng.exponential(total * static_cast<double>(active.size()));
      if (tau - dt > t_next) {
        tau -= dt;
        const auto i = rng.below(active.size());
        const Lineage lin = active[i];
        const double u = rng.uniform() * total;
        if (u < rates.dup) {
          const NodeId v = new_node(lin.parent, tau, Event::kDuplication, lin.edge);
          active[i].parent = v;
          active.push_back({v, lin.edge});
          ++on_edge[lin.edge];
        } else if (u < rates.dup + rates.loss) {
          if (on_edge[lin.edge] == 1) {
            if (++rejections > kMaxLossRejections) throw SimulationError("simulation: too many rejected losses");
            continue;
          }
          new_node(lin.parent, tau, Event::kLoss, lin.edge);
          active.erase(active.begin() + static_cast<long>(i));
          --on_edge[lin.edge];
        } else {
          std::vector<NodeId> targets;
          for (const auto& [t, e] : alive)
            if (e != lin.edge) targets.push_back(e);
          if (targets.empty()) continue;
          const NodeId to = targets[rng.below(targets.size())];
          const NodeId v = new_node(lin.parent, tau, Event::kTransfer, lin.edge);
          active[i].parent = v;
          active.push_back({v, to});
          ++on_edge[to];
        }
        continue;
      }
    }
    tau = t_next;
    alive.erase(alive.begin());
    std::vector<Lineage> rest;
    for (const auto& lin : active) {
      if (lin.edge != c) {
        rest.push_back(lin);
      } else if (species.is_leaf(c)) {
        const NodeId v = new_node(lin.parent, 0.0, Event::kLeaf, c);
        gene.nodes[v].label = species.label(c) + "_" + std::to_string(++extant_count[c]);
        gene.nodes[v].color = species.label(c);
      } else {
        const NodeId v = new_node(lin.parent, t_next, Event::kSpeciation, c);
        for (NodeId child : species.children(c)) {
          rest.push_back({v, child});
          ++on_edge[child];
        }
      }
    }
    on_edge[c] = 0;
    if (!species.is_leaf(c))
      for (NodeId child : species.children(c)) alive.insert({-time_of(child), child});
    active = std::move(rest);
  }
  out.observable = prune_observable(gene);
  return out;
}

LeafColoredTree prune_observable(const RawTree& gene) {
  const auto n = gene.nodes.size();
  if (gene.root < 0 || static_cast<std::size_t>(gene.root) >= n) throw InputError("prune: root out of range");
  std::vector<char> keep(n, 0);
  std::function<bool(NodeId)> mark = [&](NodeId v) {
    const auto& node = gene.nodes[v];
    bool any = node.children.empty() && node.event != Event::kLoss && !node.label.empty();
    for (NodeId c : node.children) any = mark(c) || any;
    keep[v] = any;
    return any;
  };
  if (!mark(gene.root)) throw InputError("prune: no extant genes");
  RawTree kept = gene;
  for (auto& node : kept.nodes)
    node.children.erase(std::remove_if(node.children.begin(), node.children.end(), [&](NodeId c) { return !keep[c]; }),
                        node.children.end());
  return suppress_unary(kept);
}

std::vector<ReplicateResult> run_experiment(const ExperimentConfig& config) {
  if (config.min_species < 3 || config.max_species < config.min_species)
    throw InputError("experiment: species range must satisfy 3 <= min <= max");
  if (config.replicates < 1) throw InputError("experiment: at least one replicate is required");
  if (config.grid.empty()) throw InputError("experiment: empty rate grid");
  std::vector<ReplicateResult> rows;
  for (std::size_t ri = 0; ri < config.grid.size(); ++ri)
    for (int rep = 0; rep < config.replicates; ++rep) {
      Rng rng(derive_seed(config.seed, ri, static_cast<std::uint64_t>(rep)));
      const int n = config.min_species +
                    static_cast<int>(rng.below(static_cast<std::size_t>(config.max_species - config.min_species + 1)));
      const auto species = innovation_species_tree(n, rng);
      const auto sc = simulate_gene_tree(species, config.grid[ri], rng);
      const auto g = bmg_from_tree(sc.observable);
      ReplicateResult row;
      row.rates = config.grid[ri];
      row.rate_index = static_cast<int>(ri);
      row.replicate = rep;
      row.n_species = n;
      row.n_genes = static_cast<int>(sc.observable.leaf_count());
      row.res_lrt = resolution(lrt(g));
      row.res_brt = resolution(brt(g));
      if (row.res_lrt > 0) row.ratio = row.res_brt / row.res_lrt;
      rows.push_back(row);
    }
  return rows;
}

Summary summarize(std::vector<double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  auto q = [&](double p) {
    const double h = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= values.size()) return values.back();
    return values[lo] + (h - static_cast<double>(lo)) * (values[lo + 1] - values[lo]);
  };
  s.min = values.front();
  s.max = values.back();
  s.q1 = q(0.25);
  s.median = q(0.5);
  s.q3 = q(0.75);
  return s;
}

std::vector<RateSummary> summarize_by_rate(const std::vector<ReplicateResult>& rows) {
  std::vector<RateSummary> out;
  int max_index = -1;
  for (const auto& r : rows) max_index = std::max(max_index, r.rate_index);
  for (int i = 0; i <= max_index; ++i) {
    std::vector<double> lrt_v, brt_v, ratio_v;
    RateSummary s;
    for (const auto& r : rows) {
      if (r.rate_index != i) continue;
      s.rates = r.rates;
      lrt_v.push_back(r.res_lrt);
      brt_v.push_back(r.res_brt);
      if (r.ratio) ratio_v.push_back(*r.ratio);
    }
    if (lrt_v.empty()) continue;
    s.res_lrt = summarize(std::move(lrt_v));
    s.res_brt = summarize(std::move(brt_v));
    s.ratio = summarize(std::move(ratio_v));
    out.push_back(s);
  }
  return out;
}

std::string to_csv(const std::vector<ReplicateResult>& rows) {
  std::string out = "rate_dup,rate_loss,rate_hgt,n_species,replicate,n_genes,res_lrt,res_brt,ratio\n";
  for (const auto& r : rows) {
    out += number(r.rates.dup) + "," + number(r.rates.loss) + "," + number(r.rates.hgt) + "," +
           std::to_string(r.n_species) + "," + std::to_string(r.replicate) + "," + std::to_string(r.n_genes) + "," +
           number(r.res_lrt) + "," + number(r.res_brt) + "," + (r.ratio ? number(*r.ratio) : "") + "\n";
  }
  return out;
}

std::string gnuplot_script(const std::vector<RateSummary>& summaries, const std::string& output_png) {
  std::string s = "set terminal pngcairo size 1000,700\nset output '" + output_png + "'\n";
  s += "$summary << EOD\n";
  s += "# x label lrt(min q1 med q3 max) brt(min q1 med q3 max) ratio(min q1 med q3 max)\n";
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const auto& r = summaries[i];
    s += std::to_string(i + 1) + " \"(" + number(r.rates.dup) + "," + number(r.rates.loss) + "," +
         number(r.rates.hgt) + ")\"";
    for (const Summary* m : {&r.res_lrt, &r.res_brt, &r.ratio})
      for (double v : {m->min, m->q1, m->median, m->q3, m->max}) s += " " + number(v);
    s += "\n";
  }
  s += "EOD\n";
  s += "set multiplot layout 2,1\nset boxwidth 0.25\nset style fill empty\n";
  s += "set xrange [0.5:" + std::to_string(summaries.size()) + ".5]\nset yrange [0:1.05]\nset ylabel 'res'\n";
  s += "plot $summary using ($1-0.15):4:3:7:6:xticlabels(2) with candlesticks whiskerbars title 'LRT', \\\n";
  s += "     '' using ($1-0.15):5:5:5:5 with candlesticks lt -1 notitle, \\\n";
  s += "     '' using ($1+0.15):9:8:12:11 with candlesticks whiskerbars title 'BRT', \\\n";
  s += "     '' using ($1+0.15):10:10:10:10 with candlesticks lt -1 notitle\n";
  s += "set yrange [*:*]\nset ylabel 'res(BRT) / res(LRT)'\n";
  s += "plot $summary using 1:14:13:17:16:xticlabels(2) with candlesticks whiskerbars notitle, \\\n";
  s += "     '' using 1:15:15:15:15 with candlesticks lt -1 notitle\n";
  s += "unset multiplot\n";
  return s;
}

}  // namespace bmg
