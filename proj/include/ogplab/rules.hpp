#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ogplab {

using FeatureVec = std::vector<double>;

// Per-node feature vectors after some number of synchronous rounds, plus the
// iid uniform [0,1) labels the run was initialized with.
struct FeatureState {
  int round = 0;
  std::vector<double> labels;
  std::vector<FeatureVec> features;
};

// A pluggable local update rule. The update callback receives a node's own
// features and pointers to its immediate neighbors' features from the
// previous round, and nothing else, so any rule built from pure callbacks is
// structurally local.
struct LocalRule {
  std::string name;
  std::function<FeatureVec(int node, double label)> init;
  std::function<FeatureVec(const FeatureVec& own,
                           const std::vector<const FeatureVec*>& neighbors,
                           int round)>
      update;
  std::function<bool(const FeatureVec&)> readout;  // tentative include
};

struct RuleInfo {
  std::string name;
  std::string arity;  // coefficient count, possibly in terms of depth R
  std::string summary;
};

// Rule identifier plus flat coefficient list, as named in experiment configs.
struct RuleSpec {
  std::string name;
  std::vector<double> coeffs;
};

// The shipped rule library.
//
//   identity      arity 0     features never change; readout includes all
//   broadcast     arity 0     tracks min neighbor label; include iff own
//                             label beats it (random-priority behavior)
//   neighbor_sum  arity 3     [a, b, thr]: h' = a*h + b*sum(neighbors);
//                             include iff h < thr
//   neighbor_min  arity 0     running min over the R-ball; include iff own
//                             label is the ball minimum
//   threshold     arity 3R+1  per-round [a_t, b_t, c_t]: h' = a_t*h +
//                             b_t*sum(neighbors) + c_t; include iff h < last
std::vector<RuleInfo> list_rules();

// Instantiate a shipped rule for a run of the given depth. Throws on unknown
// name or wrong coefficient count.
LocalRule make_rule(const std::string& name, const std::vector<double>& coeffs,
                    int depth);

// Default coefficient list for a rule at the given depth (used by the
// comparison experiment when a config does not override them).
std::vector<double> default_rule_coeffs(const std::string& name, int depth);

// Names of all shipped rules, in listing order.
std::vector<std::string> shipped_rule_names();

}  // namespace ogplab
