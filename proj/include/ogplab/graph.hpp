#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ogplab {

// Simple undirected graph, immutable after construction. Node ids are
// 0..n-1, the edge list is kept sorted with u < v, and neighbor lists are
// sorted. Construction rejects self-loops, duplicate edges and out-of-range
// ids.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int num_nodes() const { return n_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(edges_.size()); }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::span<const int> neighbors(int u) const {
    return {adj_flat_.data() + adj_off_[u],
            adj_flat_.data() + adj_off_[u + 1]};
  }

  int degree(int u) const {
    return static_cast<int>(adj_off_[u + 1] - adj_off_[u]);
  }

  bool has_edge(int u, int v) const;

  // BFS distances from source; unreachable nodes get -1.
  std::vector<int> bfs_distances(int source) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> adj_flat_;
  std::vector<std::int64_t> adj_off_;
};

// K-uniform hypergraph: every edge is a sorted set of K distinct nodes,
// duplicate edges rejected.
class Hypergraph {
 public:
  Hypergraph(int n, int k, std::vector<std::vector<int>> edges);

  int num_nodes() const { return n_; }
  int arity() const { return k_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(edges_.size()); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  // Edge ids incident to node u.
  std::span<const std::int64_t> incident(int u) const {
    return {inc_flat_.data() + inc_off_[u],
            inc_flat_.data() + inc_off_[u + 1]};
  }

  int degree(int u) const {
    return static_cast<int>(inc_off_[u + 1] - inc_off_[u]);
  }

  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && k_ == other.k_ && edges_ == other.edges_;
  }

  // View a graph as a 2-uniform hypergraph (shared cost/flip machinery).
  static Hypergraph from_graph(const Graph& g);

 private:
  int n_;
  int k_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::int64_t> inc_flat_;
  std::vector<std::int64_t> inc_off_;
};

}  // namespace ogplab
