#ifndef LATMAX_DIFFUSION_HPP
#define LATMAX_DIFFUSION_HPP

#include <cstdint>
#include <vector>

#include "latmax/extint.hpp"
#include "latmax/network.hpp"

namespace latmax {

/// Per-node activation rounds of one diffusion run. activation_round(v) is
/// 0 iff v was a seed; TauIndex::infinity() means v is not influenced
/// within lambda rounds.
struct DiffusionTrace {
  std::vector<TauIndex> activation_round;
  int lambda = 0;
  int rounds_to_fixpoint = 0;  // last round that activated a new node

  std::int64_t influenced_within(int tau) const;
};

/// Synchronous weighted-threshold diffusion: starting from the seed set,
/// a node activates at round tau > 0 once the weights of its in-neighbors
/// active at round tau-1 sum to at least its threshold. All round-tau
/// activations read only the round-(tau-1) set.
///
/// lambda >= 0; seeds must be valid node ids (InvalidArgumentError
/// otherwise). Runs in O(lambda * (n + arcs)) worst case.
DiffusionTrace diffuse(const InfluenceNetwork& network, const std::vector<NodeId>& seeds,
                       int lambda);

/// |{v : activation_round(v) <= tau}|. Requires 0 <= tau <= lambda.
std::int64_t influenced_count(const DiffusionTrace& trace, int tau);

}  // namespace latmax

#endif
