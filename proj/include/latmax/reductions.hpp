#ifndef LATMAX_REDUCTIONS_HPP
#define LATMAX_REDUCTIONS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "latmax/network.hpp"
#include "latmax/oracle.hpp"

namespace latmax {

/// Simple undirected graph with node thresholds, the input of the clique
/// embedding generator.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::int64_t> thresholds;
};

/// Star instance encoding a 0-1 knapsack: one zero-threshold leaf per item
/// (cost = item weight) pointing at a hub with threshold = profit bound
/// and cost = capacity + 1, arc weights = item profits, lambda 1, budget =
/// capacity. The star admits a full-influence target set within budget iff
/// the knapsack instance is a yes-instance. Zero-weight items yield
/// zero-cost leaves that normalization folds into forced seeds.
ProblemInstance knapsack_to_star(const std::vector<KnapsackItem>& items, std::int64_t capacity,
                                 std::int64_t bound);

/// Weighted complete network with identical dynamics to the input graph:
/// edges get weight n+1, non-edges weight 1, thresholds scale by n+1, all
/// costs 1. Influenced[S, tau] is the same in both for every S and tau.
InfluenceNetwork graph_to_weighted_complete(const SimpleGraph& graph);

}  // namespace latmax

#endif
