#include "latmax/solver_complete.hpp"

#include <algorithm>
#include <string>

#include "latmax/errors.hpp"

namespace latmax {

Solution solve_complete_unweighted(const ProblemInstance& instance) {
  instance.validate();
  const InfluenceNetwork& net = instance.network;
  const int n = net.n();
  if (n == 0) return make_solution(net, {}, instance.lambda);

  if (net.arc_count() != n * (n - 1)) {
    throw PreconditionError(
        "complete solver requires every ordered pair to carry an arc; "
        "use --topology brute for other instances");
  }
  for (const Arc& a : net.arcs()) {
    if (a.weight != 1) {
      throw PreconditionError(
          "complete solver handles the unweighted case only (weighted complete "
          "graphs admit no exact polynomial algorithm); use --topology brute");
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (net.cost(v) != 1) {
      throw PreconditionError(
          "complete solver requires unit costs so the budget counts nodes; "
          "use --topology brute");
    }
    if (net.threshold(v) > n) {
      throw PreconditionError("thresholds above n on a complete unweighted instance; "
                              "clamp thresholds first");
    }
  }

  const int take = static_cast<int>(std::min<std::int64_t>(instance.budget, n));

  // Counting selection of the `take` highest thresholds; thresholds lie in
  // {0..n}, so this is linear. Buckets hold ascending ids, which breaks
  // ties toward the lowest id.
  std::vector<std::vector<NodeId>> bucket(n + 1);
  for (NodeId v = 0; v < n; ++v) bucket[net.threshold(v)].push_back(v);

  std::vector<NodeId> target;
  target.reserve(take);
  for (int t = n; t >= 0 && static_cast<int>(target.size()) < take; --t) {
    for (NodeId v : bucket[t]) {
      if (static_cast<int>(target.size()) == take) break;
      target.push_back(v);
    }
  }
  return make_solution(net, std::move(target), instance.lambda);
}

}  // namespace latmax
