#ifndef LATMAX_SOLUTION_HPP
#define LATMAX_SOLUTION_HPP

#include <cstdint>
#include <vector>

#include "latmax/diffusion.hpp"
#include "latmax/network.hpp"

namespace latmax {

/// A target set together with its cost, the number of nodes it influences
/// within the latency bound, and the witnessing trace.
struct Solution {
  std::vector<NodeId> target_set;  // sorted ascending
  std::int64_t cost = 0;
  std::int64_t influenced_count = 0;
  DiffusionTrace trace;
};

/// Builds a Solution by diffusing the given target set on the network.
Solution make_solution(const InfluenceNetwork& network, std::vector<NodeId> target_set,
                       int lambda);

}  // namespace latmax

#endif
