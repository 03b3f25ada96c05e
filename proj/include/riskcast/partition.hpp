#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "riskcast/errors.hpp"

namespace riskcast {

// Undirected graph with non-negative edge weights. Ordered maps keep
// iteration deterministic.
struct WeightedGraph {
  int nodes = 0;
  std::vector<std::map<int, double>> adj;

  explicit WeightedGraph(int n = 0) : nodes(n), adj(n) {}
  void add_edge(int u, int v, double w);
  double edge(int u, int v) const;
};

struct PartitionResult {
  int parts = 0;
  std::vector<int> membership;  // node -> part id, ids canonical by first occurrence

  std::vector<int> sizes() const;
};

double cut_weight(const WeightedGraph& g, const std::vector<int>& membership);

// Deterministic multilevel heuristic: heavy-edge matching to coarsen,
// greedy region growth for the initial partition, then move/swap
// refinement on the way back up, with a few seeded restarts. Part sizes
// stay within ceil(n/k) +/- tolerance (and >= 1).
PartitionResult balanced_partition(const WeightedGraph& g, int k, int tolerance,
                                   std::uint64_t seed);

}  // namespace riskcast
