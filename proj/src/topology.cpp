#include "latmax/topology.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace latmax {

const char* topology_name(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::kPath: return "path";
    case TopologyKind::kCycle: return "cycle";
    case TopologyKind::kCompleteUnweighted: return "complete-unweighted";
    case TopologyKind::kTree: return "tree";
    case TopologyKind::kGeneral: return "general";
  }
  return "general";
}

namespace {

// Undirected support: neighbor lists over pairs joined by an arc in either
// direction, plus symmetry bookkeeping.
struct Support {
  std::vector<std::vector<NodeId>> adj;
  int edge_count = 0;
  bool all_bidirectional = true;

  explicit Support(const InfluenceNetwork& net) : adj(net.n()) {
    for (const Arc& a : net.arcs()) {
      const bool reverse = net.has_arc(a.dst, a.src);
      if (!reverse) all_bidirectional = false;
      if (a.src < a.dst || !reverse) {
        adj[a.src].push_back(a.dst);
        adj[a.dst].push_back(a.src);
        ++edge_count;
      }
    }
    for (auto& row : adj) {
      std::sort(row.begin(), row.end());
    }
  }

  bool connected() const {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::queue<NodeId> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop();
      for (NodeId u : adj[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          q.push(u);
        }
      }
    }
    return reached == n;
  }
};

std::vector<NodeId> walk_path(const Support& s, NodeId start) {
  std::vector<NodeId> order{start};
  NodeId prev = -1, cur = start;
  while (true) {
    NodeId next = -1;
    for (NodeId u : s.adj[cur]) {
      if (u != prev) {
        next = u;
        break;
      }
    }
    if (next == -1 || next == order.front()) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

Topology detect_topology(const InfluenceNetwork& net) {
  const int n = net.n();
  Topology topo;
  if (n == 0) {
    topo.kind = TopologyKind::kPath;
    return topo;
  }
  if (n == 1) {
    topo.kind = TopologyKind::kPath;
    topo.ordering = {0};
    return topo;
  }

  Support s(net);
  const bool connected = s.connected();
  int max_deg = 0, deg1 = 0, deg2 = 0;
  for (const auto& row : s.adj) {
    const int d = static_cast<int>(row.size());
    max_deg = std::max(max_deg, d);
    if (d == 1) ++deg1;
    if (d == 2) ++deg2;
  }

  // Path: a simple path with both directions present on every edge.
  if (connected && s.all_bidirectional && s.edge_count == n - 1 && max_deg <= 2 && deg1 == 2 &&
      net.arc_count() == 2 * (n - 1)) {
    NodeId start = 0;
    while (s.adj[start].size() != 1) ++start;
    topo.kind = TopologyKind::kPath;
    topo.ordering = walk_path(s, start);
    return topo;
  }

  // Cycle: every node of degree 2, both directions everywhere.
  if (n >= 3 && connected && s.all_bidirectional && s.edge_count == n && deg2 == n &&
      net.arc_count() == 2 * n) {
    topo.kind = TopologyKind::kCycle;
    // Start at node 0, turn toward its lower-id neighbor.
    std::vector<NodeId> order{0, s.adj[0][0]};
    while (true) {
      NodeId cur = order.back(), prev = order[order.size() - 2];
      NodeId next = s.adj[cur][0] == prev ? s.adj[cur][1] : s.adj[cur][0];
      if (next == 0) break;
      order.push_back(next);
    }
    topo.ordering = std::move(order);
    return topo;
  }

  // Complete unweighted: all ordered pairs present with weight 1.
  if (net.arc_count() == n * (n - 1)) {
    bool unit = true;
    for (const Arc& a : net.arcs()) {
      if (a.weight != 1) {
        unit = false;
        break;
      }
    }
    if (unit) {
      topo.kind = TopologyKind::kCompleteUnweighted;
      return topo;
    }
  }

  if (connected && s.edge_count == n - 1) {
    topo.kind = TopologyKind::kTree;
    // Root at the node of maximum in-degree so hub-shaped instances root
    // at their hub; lowest id wins ties.
    std::vector<int> indeg(n, 0);
    for (const Arc& a : net.arcs()) ++indeg[a.dst];
    NodeId best = 0;
    for (NodeId v = 1; v < n; ++v) {
      if (indeg[v] > indeg[best]) best = v;
    }
    topo.tree_root = best;
    return topo;
  }

  topo.kind = TopologyKind::kGeneral;
  return topo;
}

NormalizeResult normalize_zero_cost(const InfluenceNetwork& net) {
  const int n = net.n();
  NormalizeResult result;
  std::vector<char> removed(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (net.cost(v) == 0) {
      removed[v] = 1;
      result.forced_seeds.push_back(v);
    }
  }
  if (result.forced_seeds.empty()) {
    result.network = net;
    result.kept.resize(n);
    for (NodeId v = 0; v < n; ++v) result.kept[v] = v;
    return result;
  }

  std::vector<NodeId> new_id(n, -1);
  for (NodeId v = 0; v < n; ++v) {
    if (!removed[v]) {
      new_id[v] = static_cast<NodeId>(result.kept.size());
      result.kept.push_back(v);
    }
  }

  std::vector<std::int64_t> thresholds, costs;
  thresholds.reserve(result.kept.size());
  costs.reserve(result.kept.size());
  for (NodeId v : result.kept) {
    thresholds.push_back(net.threshold(v));
    costs.push_back(net.cost(v));
  }
  // Each removed node lowers its surviving out-neighbors' thresholds;
  // removal order does not matter since the clamp at 0 commutes.
  for (NodeId v : result.forced_seeds) {
    for (const Arc& a : net.out_arcs(v)) {
      if (removed[a.dst]) continue;
      auto& t = thresholds[new_id[a.dst]];
      t = std::max<std::int64_t>(t - a.weight, 0);
    }
  }
  std::vector<Arc> arcs;
  for (const Arc& a : net.arcs()) {
    if (!removed[a.src] && !removed[a.dst]) {
      arcs.push_back({new_id[a.src], new_id[a.dst], a.weight});
    }
  }
  result.network = InfluenceNetwork(std::move(thresholds), std::move(costs), std::move(arcs));
  return result;
}

InfluenceNetwork clamp_thresholds(const InfluenceNetwork& net) {
  std::vector<std::int64_t> thresholds(net.n());
  for (NodeId v = 0; v < net.n(); ++v) {
    thresholds[v] = std::min(net.threshold(v), net.in_weight_sum(v) + 1);
  }
  return InfluenceNetwork(std::move(thresholds), net.costs(), net.arcs());
}

}  // namespace latmax
