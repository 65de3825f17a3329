#include "latmax/generator.hpp"

#include <string>

#include "latmax/errors.hpp"

namespace latmax {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgumentError("empty uniform range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

GenTopology gen_topology_from_string(const std::string& name) {
  if (name == "path") return GenTopology::kPath;
  if (name == "cycle") return GenTopology::kCycle;
  if (name == "tree") return GenTopology::kTree;
  if (name == "complete") return GenTopology::kComplete;
  throw InvalidArgumentError("unknown topology '" + name +
                             "' (expected path, cycle, tree, or complete)");
}

const char* gen_topology_name(GenTopology t) {
  switch (t) {
    case GenTopology::kPath: return "path";
    case GenTopology::kCycle: return "cycle";
    case GenTopology::kTree: return "tree";
    case GenTopology::kComplete: return "complete";
  }
  return "path";
}

ProblemInstance gen_random_instance(GenTopology topology, int n, std::uint64_t seed,
                                    const GenCaps& caps, int lambda, std::int64_t budget) {
  if (n < 1) throw InvalidArgumentError("n must be >= 1");
  if (topology == GenTopology::kCycle && n < 3) {
    throw InvalidArgumentError("a cycle needs at least 3 nodes");
  }
  if (caps.max_weight < 0 || caps.max_threshold < 0 || caps.max_cost < 1) {
    throw InvalidArgumentError("caps must satisfy max_weight >= 0, max_threshold >= 0, max_cost >= 1");
  }
  Rng rng(seed);

  std::vector<std::int64_t> thresholds(n), costs(n);
  std::vector<Arc> arcs;

  const auto draw_node = [&](NodeId v) {
    thresholds[v] = rng.uniform(0, caps.max_threshold);
    costs[v] = rng.uniform(1, caps.max_cost);
  };
  const auto both_directions = [&](NodeId u, NodeId v) {
    arcs.push_back({u, v, rng.uniform(0, caps.max_weight)});
    arcs.push_back({v, u, rng.uniform(0, caps.max_weight)});
  };

  switch (topology) {
    case GenTopology::kPath:
      for (NodeId v = 0; v < n; ++v) draw_node(v);
      for (NodeId v = 0; v + 1 < n; ++v) both_directions(v, v + 1);
      break;
    case GenTopology::kCycle:
      for (NodeId v = 0; v < n; ++v) draw_node(v);
      for (NodeId v = 0; v < n; ++v) both_directions(v, (v + 1) % n);
      break;
    case GenTopology::kTree:
      for (NodeId v = 0; v < n; ++v) draw_node(v);
      for (NodeId v = 1; v < n; ++v) {
        const NodeId p = static_cast<NodeId>(rng.uniform(0, v - 1));
        // Occasionally keep only one direction; the support stays a tree.
        const std::int64_t mode = rng.uniform(0, 5);
        if (mode != 0) arcs.push_back({p, v, rng.uniform(0, caps.max_weight)});
        if (mode != 1) arcs.push_back({v, p, rng.uniform(0, caps.max_weight)});
      }
      break;
    case GenTopology::kComplete:
      for (NodeId v = 0; v < n; ++v) {
        thresholds[v] = rng.uniform(0, n);
        costs[v] = 1;
      }
      for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
          if (u != v) arcs.push_back({u, v, 1});
        }
      }
      break;
  }

  ProblemInstance inst;
  inst.network = InfluenceNetwork(std::move(thresholds), std::move(costs), std::move(arcs));
  inst.lambda = lambda;
  inst.budget = budget;
  inst.validate();
  return inst;
}

}  // namespace latmax
