#pragma once

#include <cstdint>
#include <vector>

#include "ogplab/assignment.hpp"
#include "ogplab/graph.hpp"
#include "ogplab/spin_tensor.hpp"

namespace ogplab {

// Node subset with no internal edge. Construction validates independence
// against the host graph, so a live IndependentSet is always feasible.
class IndependentSet {
 public:
  IndependentSet(const Graph& host, std::vector<int> members);

  const Graph& host() const { return *host_; }
  const std::vector<int>& members() const { return members_; }  // sorted
  int size() const { return static_cast<int>(members_.size()); }
  double density() const {
    return host_->num_nodes() == 0
               ? 0.0
               : static_cast<double>(size()) / host_->num_nodes();
  }
  bool contains(int u) const;

  Assignment to_assignment() const;

 private:
  const Graph* host_;
  std::vector<int> members_;
};

// Independent-set cost: number of ones when the string encodes an
// independent set, 0 otherwise.
std::int64_t is_cost(const Graph& g, const Assignment& sigma);

// True iff no edge has both endpoints set.
bool is_feasible(const Graph& g, const Assignment& sigma);

// Convert a feasible indicator string into an IndependentSet. Throws on an
// infeasible string.
IndependentSet to_independent_set(const Graph& g, const Assignment& sigma);

// Number of edges with opposite-sign endpoints.
std::int64_t maxcut_cost(const Graph& g, const Assignment& sigma);

// Number of hyperedges whose sign product is -1.
std::int64_t hyper_maxcut_cost(const Hypergraph& h, const Assignment& sigma);

// Full ordered sum over p-tuples, from symmetric storage with multiplicity
// weights.
double pspin_energy(const SpinTensor& j, const Assignment& sigma);

}  // namespace ogplab
