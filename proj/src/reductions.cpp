#include "latmax/reductions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "latmax/errors.hpp"

namespace latmax {

ProblemInstance knapsack_to_star(const std::vector<KnapsackItem>& items, std::int64_t capacity,
                                 std::int64_t bound) {
  if (items.empty()) throw InvalidArgumentError("knapsack-star needs at least one item");
  if (capacity < 0 || bound < 0) {
    throw InvalidArgumentError("capacity and bound must be non-negative");
  }
  const int n = static_cast<int>(items.size());
  std::vector<std::int64_t> thresholds(n + 1, 0), costs(n + 1, 0);
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (items[i].profit < 0 || items[i].weight < 0) {
      throw InvalidArgumentError("items must have non-negative profit and weight");
    }
    costs[i] = items[i].weight;
    arcs.push_back({static_cast<NodeId>(i), static_cast<NodeId>(n), items[i].profit});
  }
  thresholds[n] = bound;
  costs[n] = capacity + 1;

  ProblemInstance inst;
  inst.network = InfluenceNetwork(std::move(thresholds), std::move(costs), std::move(arcs));
  inst.lambda = 1;
  inst.budget = capacity;
  return inst;
}

InfluenceNetwork graph_to_weighted_complete(const SimpleGraph& graph) {
  const int n = graph.n;
  if (n < 0) throw InvalidArgumentError("graph size must be non-negative");
  if (static_cast<int>(graph.thresholds.size()) != n) {
    throw InvalidArgumentError("thresholds list must have one entry per node");
  }
  std::set<std::pair<NodeId, NodeId>> edges;
  for (auto [u, v] : graph.edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidArgumentError("edge endpoint out of range");
    if (u == v) throw InvalidArgumentError("self-loop in graph");
    edges.insert({std::min(u, v), std::max(u, v)});
  }

  std::vector<std::int64_t> thresholds(n), costs(n, 1);
  for (int v = 0; v < n; ++v) {
    if (graph.thresholds[v] < 0) throw InvalidArgumentError("negative threshold");
    thresholds[v] = static_cast<std::int64_t>(n + 1) * graph.thresholds[v];
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool edge = edges.count({std::min(u, v), std::max(u, v)}) > 0;
      arcs.push_back({u, v, edge ? n + 1 : 1});
    }
  }
  return InfluenceNetwork(std::move(thresholds), std::move(costs), std::move(arcs));
}

}  // namespace latmax
