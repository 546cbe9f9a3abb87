#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ogplab/assignment.hpp"
#include "ogplab/graph.hpp"
#include "ogplab/problems.hpp"
#include "ogplab/spin_tensor.hpp"

namespace ogplab {

inline constexpr int kBranchAndBoundCap = 60;   // bitset-backed search
inline constexpr int kExhaustiveCap = 24;       // 2^n style scans
inline constexpr std::int64_t kDefaultSetBudget = 1 << 22;
inline constexpr std::int64_t kDefaultPairBudget = 200'000'000;

// Exact optimum plus witnesses. The optimum is integral for IS/MAXCUT and
// real for p-spin; integers up to 2^53 are exact in the double.
struct ExactResult {
  double optimum = 0.0;
  std::vector<Assignment> witnesses;  // all optima when collect_all, else one
  std::uint64_t explored = 0;         // search tree nodes (diagnostics)
};

// Exact maximum independent set size via branch and bound (greedy lower
// bound, residual-node-count upper bound). Requires g.n <= cap.
ExactResult exact_max_is(const Graph& g, bool collect_all = false,
                         int cap = kBranchAndBoundCap);

// Exact maximum cut, exhaustive over 2^(n-1) sign patterns (global-flip
// symmetry). Requires n <= kExhaustiveCap.
ExactResult exact_max_cut(const Graph& g, bool collect_all = false);
ExactResult exact_max_cut(const Hypergraph& h, bool collect_all = false);

// Exact maximum of pspin_energy over {-1,+1}^n. Requires n <= kExhaustiveCap.
ExactResult exact_ground_state(const SpinTensor& j, bool collect_all = false);

// All independent sets I with |I| >= ceil(theta * |I*|), theta in (0,1].
// Requires g.n <= kExhaustiveCap; throws when the result count would exceed
// budget.
std::vector<IndependentSet> enumerate_theta_optimal_is(
    const Graph& g, double theta, std::int64_t budget = kDefaultSetBudget);

// Exact multiset of |I1 ∩ I2| over all unordered pairs of theta-optimal sets,
// the diagonal pairs included. Values are intersection sizes; divide by n for
// the normalized overlap.
struct OverlapSpectrum {
  int n = 0;
  std::int64_t num_sets = 0;
  std::int64_t num_pairs = 0;
  std::map<int, std::uint64_t> counts;  // intersection size -> multiplicity
};

OverlapSpectrum overlap_spectrum_exact(
    const Graph& g, double theta, std::int64_t set_budget = kDefaultSetBudget,
    std::int64_t pair_budget = kDefaultPairBudget);

// Size threshold used for theta-optimality relative to a known optimum.
int theta_threshold(double theta, int optimum);

}  // namespace ogplab
