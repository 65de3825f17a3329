#ifndef LATMAX_TOPOLOGY_HPP
#define LATMAX_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "latmax/network.hpp"

namespace latmax {

enum class TopologyKind { kPath, kCycle, kCompleteUnweighted, kTree, kGeneral };

const char* topology_name(TopologyKind kind);

/// Result of exact topology classification. When several labels apply the
/// most specific wins, in the order Path > Cycle > CompleteUnweighted >
/// Tree. For a tree the chosen root is the node of maximum in-degree
/// (lowest id on ties); for paths and cycles `ordering` lists the nodes
/// v_1..v_n (paths start at the lower-id endpoint, cycles start at node
/// with lowest id and turn toward its lower-id neighbor).
struct Topology {
  TopologyKind kind = TopologyKind::kGeneral;
  NodeId tree_root = -1;
  std::vector<NodeId> ordering;
};

/// Classification rules:
///  - Path: arcs are exactly both directions along consecutive pairs of
///    some ordering (weights arbitrary, including 0).
///  - Cycle: likewise plus the wrap-around pair, n >= 3.
///  - CompleteUnweighted: every ordered pair carries an arc of weight 1.
///  - Tree: the undirected arc-support graph is a tree; arcs may exist in
///    one or both directions (a missing direction acts as weight 0).
Topology detect_topology(const InfluenceNetwork& network);

struct NormalizeResult {
  InfluenceNetwork network;         // zero-cost nodes removed, ids compacted
  std::vector<NodeId> forced_seeds; // removed nodes, original ids
  std::vector<NodeId> kept;         // new id -> original id
};

/// Removes every zero-cost node v, lowering each out-neighbor's threshold
/// by w(v, u) (clamped at 0). Removed nodes are free members of any
/// optimal target set and are reported as forced seeds. Runs in
/// O(n + arcs).
NormalizeResult normalize_zero_cost(const InfluenceNetwork& network);

/// Caps every threshold at W(v) + 1, which leaves the dynamics of every
/// target set unchanged (a node above its total in-weight can only be
/// seeded either way).
InfluenceNetwork clamp_thresholds(const InfluenceNetwork& network);

}  // namespace latmax

#endif
