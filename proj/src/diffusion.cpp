#include "latmax/diffusion.hpp"

#include <string>

#include "latmax/errors.hpp"

namespace latmax {

std::int64_t DiffusionTrace::influenced_within(int tau) const {
  std::int64_t count = 0;
  for (TauIndex r : activation_round) {
    if (!r.is_infinite() && r.value() <= tau) ++count;
  }
  return count;
}

DiffusionTrace diffuse(const InfluenceNetwork& network, const std::vector<NodeId>& seeds,
                       int lambda) {
  if (lambda < 0) throw InvalidArgumentError("lambda must be >= 0");
  const int n = network.n();

  DiffusionTrace trace;
  trace.lambda = lambda;
  trace.activation_round.assign(n, TauIndex::infinity());

  std::vector<NodeId> frontier;
  for (NodeId s : seeds) {
    if (s < 0 || s >= n) {
      throw InvalidArgumentError("unknown node id in seeds: " + std::to_string(s));
    }
    if (trace.activation_round[s].is_infinite()) {
      trace.activation_round[s] = TauIndex::finite(0);
      frontier.push_back(s);
    }
  }

  std::vector<std::int64_t> incoming(n, 0);
  std::vector<NodeId> next;
  for (int round = 1; round <= lambda && !(frontier.empty() && round > 1); ++round) {
    next.clear();
    for (NodeId v : frontier) {
      for (const Arc& a : network.out_arcs(v)) {
        if (!trace.activation_round[a.dst].is_infinite()) continue;
        incoming[a.dst] += a.weight;
        if (incoming[a.dst] >= network.threshold(a.dst)) {
          trace.activation_round[a.dst] = TauIndex::finite(round);
          next.push_back(a.dst);
        }
      }
    }
    if (round == 1) {
      // Zero-threshold nodes activate unconditionally, arcs or not.
      for (NodeId v = 0; v < n; ++v) {
        if (trace.activation_round[v].is_infinite() && network.threshold(v) == 0) {
          trace.activation_round[v] = TauIndex::finite(1);
          next.push_back(v);
        }
      }
    }
    if (!next.empty()) trace.rounds_to_fixpoint = round;
    frontier.swap(next);
  }
  return trace;
}

std::int64_t influenced_count(const DiffusionTrace& trace, int tau) {
  if (tau < 0 || tau > trace.lambda) {
    throw InvalidArgumentError("tau out of range [0, lambda]");
  }
  return trace.influenced_within(tau);
}

}  // namespace latmax
