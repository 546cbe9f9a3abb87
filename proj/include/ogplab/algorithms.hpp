#pragma once

#include <vector>

#include "ogplab/assignment.hpp"
#include "ogplab/graph.hpp"
#include "ogplab/problems.hpp"
#include "ogplab/rng.hpp"
#include "ogplab/rules.hpp"

namespace ogplab {

// Scan nodes in a uniformly random order; add a node iff it has no
// previously added neighbor. Output is maximal.
IndependentSet greedy_is(const Graph& g, SeededRng& rng);

// Repeatedly pick a minimum-residual-degree node (uniform tie-break), add it,
// delete it and its neighbors. Output is maximal.
IndependentSet degree_greedy_is(const Graph& g, SeededRng& rng);

// Draw iid uniform [0,1) labels, apply rule.init, then depth synchronous
// update rounds. depth = 0 returns the initialized state.
FeatureState gnn_forward(const Graph& g, const LocalRule& rule, int depth,
                         SeededRng& rng);

// Same forward pass with caller-supplied labels (used by the locality
// perturbation test, which must pin labels near the probed node).
FeatureState gnn_forward_with_labels(const Graph& g, const LocalRule& rule,
                                     int depth, std::vector<double> labels);

// Apply rule.readout to get tentative inclusions, then one conflict-removal
// pass: a tentatively included node survives iff its label is strictly
// smaller than every tentatively included neighbor's label. Always feasible,
// and adds one hop to the locality radius.
IndependentSet project_to_is(const Graph& g, const FeatureState& state,
                             const LocalRule& rule);

// Node included iff its uniform label is strictly smaller than all neighbor
// labels. Identical to gnn_forward(broadcast, 1) + project_to_is under the
// same seed.
IndependentSet random_priority_is(const Graph& g, SeededRng& rng);

// Random-order single-spin flips accepted while the cut strictly increases;
// stops at a local optimum or after max_rounds full passes.
Assignment local_flip_cut(const Hypergraph& h, const Assignment& sigma0,
                          int max_rounds, SeededRng& rng);
Assignment local_flip_cut(const Graph& g, const Assignment& sigma0,
                          int max_rounds, SeededRng& rng);

}  // namespace ogplab
