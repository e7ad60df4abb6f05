#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmg/tree.hpp"

namespace bmg {

/// Scenario generation gave up (too many rejected losses).
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Portable draws on top of mt19937_64; std distributions are not
/// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [0, n).
  std::size_t below(std::size_t n);
  double exponential(double rate);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64-based seed for (master, a, b).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

struct Rates {
  double dup = 0;
  double loss = 0;
  double hgt = 0;
};

inline constexpr int kInitialFeatures = 1;
inline constexpr double kInnovationProbability = 0.5;
inline constexpr int kMaxLossRejections = 100000;

/// Planted binary species tree on n leaves S00, S01, ... grown by the
/// innovation model: a uniformly chosen species proposes gaining a new
/// feature or losing one of its features (50/50); the proposal is resampled
/// when the feature set would be empty or already taken, otherwise the
/// species splits into the old and the new set. Planted root at time 1,
/// leaves at 0, inner times sorted uniform draws. InputError for n < 2.
LeafColoredTree innovation_species_tree(int n, Rng& rng);
LeafColoredTree innovation_species_tree(int n, std::uint64_t seed);

struct Scenario {
  LeafColoredTree species;
  /// True gene tree with times and events; planted, losses are unlabelled
  /// leaves tagged kLoss.
  RawTree gene;
  /// Species-tree vertex below the edge carrying each gene vertex (the
  /// speciation vertex itself for speciations and leaves).
  std::vector<NodeId> gene_species;
  LeafColoredTree observable;
  Rates rates;
};

/// Duplication, loss and transfer along the species tree as a constant-rate
/// process; every lineage branches at each speciation. A loss that would
/// leave a species edge without lineages is rejected. Transfers copy the
/// gene into a uniformly chosen other edge alive at that time (the donor
/// keeps its copy). Extant genes are labelled `<species>_<k>`.
Scenario simulate_gene_tree(const LeafColoredTree& species, Rates rates, Rng& rng);

/// Drops loss-only branches and unary vertices, including the planted edge.
LeafColoredTree prune_observable(const RawTree& gene);

struct ExperimentConfig {
  int min_species = 10;
  int max_species = 30;
  std::vector<Rates> grid;
  int replicates = 1;
  std::uint64_t seed = 0;
};

struct ReplicateResult {
  Rates rates;
  int rate_index = 0;
  int replicate = 0;
  int n_species = 0;
  int n_genes = 0;
  double res_lrt = 0;
  double res_brt = 0;
  /// res_brt / res_lrt; empty when res_lrt = 0.
  std::optional<double> ratio;
};

/// One scenario per (rate, replicate) with seed derive_seed(seed, rate
/// index, replicate index); species count uniform in the configured range.
/// Rows are ordered by rate index, then replicate.
std::vector<ReplicateResult> run_experiment(const ExperimentConfig& config);

struct Summary {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
  std::size_t count = 0;
};

/// Linear-interpolation quartiles (type 7); count 0 for empty input.
Summary summarize(std::vector<double> values);

struct RateSummary {
  Rates rates;
  Summary res_lrt, res_brt, ratio;
};

std::vector<RateSummary> summarize_by_rate(const std::vector<ReplicateResult>& rows);

std::string to_csv(const std::vector<ReplicateResult>& rows);
/// Self-contained gnuplot script with box summaries per rate triple.
std::string gnuplot_script(const std::vector<RateSummary>& summaries, const std::string& output_png);

}  // namespace bmg
