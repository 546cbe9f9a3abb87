#pragma once

#include <cstdint>

#include "ogplab/graph.hpp"
#include "ogplab/rng.hpp"
#include "ogplab/spin_tensor.hpp"

namespace ogplab {

// Dense-tensor entry budget for gen_pspin: n^p may not exceed this.
// 64^3 == 512^2 == 262144.
inline constexpr std::int64_t kDefaultPspinCap = 262144;

// Uniform random d-regular simple graph on n nodes.
//
// Requires n*d even and d < n. Two sampling strategies, chosen by expected
// cost: the pairing (configuration) model with full restart on any self-loop
// or multi-edge, which is exactly uniform over simple d-regular graphs, and
// an incremental legal-pair matcher (Steger-Wormald) for parameter ranges
// where the restart count exp((d-1)/2 + (d-1)^2/4) is astronomically large.
// The switch is deterministic in (n, d).
Graph gen_regular(int n, int d, SeededRng& rng);

// Erdos-Renyi graph: each unordered pair present independently with
// probability d/n. Requires 0 <= d <= n. Sparse case uses geometric gap
// skipping over the linearized pair space.
Graph gen_er(int n, double d, SeededRng& rng);

// K-uniform hypergraph: each K-subset present independently with probability
// d / C(n-1, K-1), so the mean node degree is d. Requires K >= 2, n >= K,
// 0 <= d <= C(n-1, K-1).
Hypergraph gen_hypergraph(int n, double d, int k, SeededRng& rng);

// Gaussian coupling tensor: one standard normal draw per sorted index tuple.
// Requires p >= 2 and n^p <= cap.
SpinTensor gen_pspin(int n, int p, SeededRng& rng,
                     std::int64_t cap = kDefaultPspinCap);

}  // namespace ogplab
