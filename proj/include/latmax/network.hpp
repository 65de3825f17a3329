#ifndef LATMAX_NETWORK_HPP
#define LATMAX_NETWORK_HPP

#include <cstdint>
#include <vector>

#include "latmax/errors.hpp"

namespace latmax {

using NodeId = std::int32_t;

struct Arc {
  NodeId src = 0;
  NodeId dst = 0;
  std::int64_t weight = 0;
};

/// Directed weighted network with a threshold and an activation cost per
/// node. Node ids are exactly 0..n-1; no self-loops; at most one arc per
/// ordered pair. Immutable after construction.
class InfluenceNetwork {
 public:
  InfluenceNetwork() = default;

  /// Validates the invariants above and builds the adjacency index.
  /// Throws InvalidArgumentError on violation. Costs may still be zero
  /// here; normalize_zero_cost removes them.
  InfluenceNetwork(std::vector<std::int64_t> thresholds, std::vector<std::int64_t> costs,
                   std::vector<Arc> arcs);

  int n() const { return static_cast<int>(threshold_.size()); }
  std::int64_t threshold(NodeId v) const { return threshold_.at(v); }
  std::int64_t cost(NodeId v) const { return cost_.at(v); }
  const std::vector<std::int64_t>& thresholds() const { return threshold_; }
  const std::vector<std::int64_t>& costs() const { return cost_; }

  /// Out-arcs of v, sorted by destination.
  const std::vector<Arc>& out_arcs(NodeId v) const { return out_.at(v); }
  /// All arcs, sorted by (src, dst).
  const std::vector<Arc>& arcs() const { return arcs_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  bool has_arc(NodeId u, NodeId v) const;
  /// Weight of the arc u->v; 0 if the arc is absent.
  std::int64_t arc_weight(NodeId u, NodeId v) const;

  /// W(v) = sum of incoming arc weights.
  std::int64_t in_weight_sum(NodeId v) const { return in_sum_.at(v); }
  /// max over v of W(v). The per-node quantity is the one complexity
  /// bounds are stated against; see README.
  std::int64_t max_in_weight_sum() const;

  std::int64_t total_cost() const;

 private:
  std::vector<std::int64_t> threshold_;
  std::vector<std::int64_t> cost_;
  std::vector<std::vector<Arc>> out_;
  std::vector<Arc> arcs_;
  std::vector<std::int64_t> in_sum_;
};

/// A network together with a latency bound and a budget.
struct ProblemInstance {
  InfluenceNetwork network;
  int lambda = 1;            // latency bound, >= 1
  std::int64_t budget = 0;   // >= 0

  void validate() const {
    if (lambda < 1) throw InvalidArgumentError("lambda must be >= 1");
    if (budget < 0) throw InvalidArgumentError("budget must be >= 0");
  }
};

}  // namespace latmax

#endif
