#include "latmax/solution.hpp"

#include <algorithm>

namespace latmax {

Solution make_solution(const InfluenceNetwork& network, std::vector<NodeId> target_set,
                       int lambda) {
  std::sort(target_set.begin(), target_set.end());
  target_set.erase(std::unique(target_set.begin(), target_set.end()), target_set.end());

  Solution sol;
  sol.trace = diffuse(network, target_set, lambda);
  sol.influenced_count = sol.trace.influenced_within(lambda);
  for (NodeId v : target_set) sol.cost += network.cost(v);
  sol.target_set = std::move(target_set);
  return sol;
}

}  // namespace latmax
