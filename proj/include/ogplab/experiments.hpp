#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogplab/algorithms.hpp"
#include "ogplab/graph.hpp"
#include "ogplab/problems.hpp"
#include "ogplab/rng.hpp"
#include "ogplab/rules.hpp"
#include "ogplab/stats.hpp"

namespace ogplab {

// |I1 ∩ I2| / n. Both sets must live on the same host graph.
double pairwise_overlap(const IndependentSet& i1, const IndependentSet& i2,
                        int n);

// ---------------------------------------------------------------------------
// Instance specification shared by the experiment drivers.

enum class InstanceKind { kRegular, kEr, kHypergraph };

struct InstanceSpec {
  InstanceKind kind = InstanceKind::kRegular;
  int n = 0;
  double d = 0.0;
  int k = 2;  // hypergraph arity
};

Graph make_graph_instance(const InstanceSpec& spec, SeededRng& rng);

// ---------------------------------------------------------------------------
// Overlap probe.

struct OverlapHistogram {
  std::vector<double> bin_edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t sample_count = 0;  // number of histogrammed pairs
  std::string provenance;
  // Exact observed intersection sizes (support, before binning).
  std::map<int, std::uint64_t> support_counts;
  std::optional<std::pair<double, double>> gap_candidate;  // (nu1, nu2)
};

struct ProbeParams {
  InstanceSpec instance;
  double theta = 1.0;
  // "oracle" enumerates every theta-optimal set (n <= 20); otherwise one of
  // greedy | degree_greedy | random_priority | rule:<name>.
  std::string sampler = "oracle";
  std::vector<double> rule_coeffs;  // for rule:<name> samplers
  int depth = 1;                    // for rule:<name> samplers
  std::int64_t pairs = 1000;        // target pair count
  int max_attempts_factor = 20;     // sampler runs per needed solution
  int bins = 40;
  bool include_diagonal = true;
};

struct OverlapProbeResult {
  OverlapHistogram hist;
  std::int64_t attempts = 0;
  std::int64_t accepted = 0;
  int size_threshold = 0;  // theta-optimality cutoff actually applied
  bool oracle_relative = false;
  bool insufficient_yield = false;
  std::vector<double> overlaps;  // one value per histogrammed pair
};

// Generates one instance from rng, gathers theta-optimal solutions (oracle
// enumeration at n <= 20, sampler runs with derived seeds otherwise), and
// histograms pairwise overlaps. Yield shortfall is reported in-band.
OverlapProbeResult overlap_probe(const ProbeParams& params, SeededRng rng);

// ---------------------------------------------------------------------------
// Density experiments.

struct DensityEstimate {
  double d = 0.0;
  std::int64_t n = 0;
  int trials = 0;
  double mean_density = 0.0;
  double std_error = 0.0;
  double benchmark = 0.0;  // 2 log(d) / d
  double ratio_to_benchmark = 0.0;
  std::vector<double> per_trial;
};

double density_benchmark(double d);

// Mean greedy density on G_d(n) over independent trials, with its ratio to
// 2 log(d)/d.
DensityEstimate greedy_ratio_experiment(int d, int n, int trials,
                                        SeededRng rng, int workers = 1);

struct ComparisonRow {
  std::string algorithm;  // "greedy", "degree_greedy", or "rule:<name>"
  int depth = -1;         // -1 for the greedy baselines
  DensityEstimate estimate;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  // Best mean density over the rule rows (greedy baselines excluded).
  double best_local_density = 0.0;
  std::string best_local_algorithm;
};

// Densities of every shipped rule at each depth 0..max_depth next to the
// greedy and degree-greedy baselines, all on the same per-trial instances.
ComparisonTable local_vs_greedy_experiment(int d, int n, int max_depth,
                                           const std::vector<RuleSpec>& rules,
                                           int trials, SeededRng rng,
                                           int workers = 1);

// ---------------------------------------------------------------------------
// Locality perturbation test.

struct LocalityReport {
  int trials = 0;
  int membership_changes = 0;
  bool pass = false;
  int radius = 0;           // R + 1, the tested pipeline radius
  int far_nodes = 0;        // nodes outside the radius ball
  bool baseline_member = false;
};

// Rewires edges / redraws labels only at distance > R+1 from u and re-runs
// the pipeline; PASS iff u's membership never changes. Requires nodes
// outside the radius-(R+1) ball.
LocalityReport locality_perturbation_test(const Graph& g, const LocalRule& rule,
                                          int depth, int u, int trials,
                                          SeededRng rng);

// ---------------------------------------------------------------------------
// MAXCUT scaling.

struct ScalingPoint {
  int d = 0;
  double mean_cut_per_n = 0.0;
  double std_error = 0.0;
  std::vector<double> per_trial;  // cut/n per trial
};

struct ScalingFitResult {
  int k = 2;
  std::int64_t n = 0;
  std::vector<ScalingPoint> points;
  double intercept = 0.0;
  double slope = 0.0;  // gamma-hat, the sqrt(d) coefficient
  double intercept_stderr = 0.0;
  double slope_stderr = 0.0;
  std::vector<double> residuals;
};

// Runs the chosen algorithm ("random" assignment or "local_flip") on
// G(n,d;K) for each d, then fits cut/n - d/(2K) = a + gamma * sqrt(d).
// Requires at least two distinct degrees.
ScalingFitResult maxcut_scaling_experiment(int k, const std::vector<int>& d_list,
                                           int n, int trials,
                                           const std::string& algorithm,
                                           SeededRng rng, int workers = 1,
                                           int max_rounds = 100);

// Fit stage alone, exposed for synthetic-data checks: points are (d, y) with
// y = cut/n - d/(2K) already subtracted.
LineFit fit_scaling(const std::vector<double>& sqrt_d,
                    const std::vector<double>& y,
                    const std::vector<double>& y_sigma = {});

// ---------------------------------------------------------------------------
// Shared trial pool: runs fn(trial_index) for 0..trials-1 on `workers`
// threads; results land in a vector indexed by trial, so output is identical
// for every worker count.
void parallel_trials(int trials, int workers,
                     const std::function<void(int)>& fn);

}  // namespace ogplab
