#include "latmax/oracle.hpp"

#include <algorithm>
#include <string>

#include "latmax/diffusion.hpp"
#include "latmax/errors.hpp"

namespace latmax {

namespace {

struct Best {
  std::int64_t count = -1;
  std::vector<NodeId> set;

  void offer(std::int64_t cand_count, const std::vector<NodeId>& cand) {
    if (cand_count > count ||
        (cand_count == count &&
         std::lexicographical_compare(cand.begin(), cand.end(), set.begin(), set.end()))) {
      count = cand_count;
      set = cand;
    }
  }
};

void enumerate(const ProblemInstance& inst, NodeId next, std::int64_t left,
               std::vector<NodeId>& cur, Best& best) {
  const int n = inst.network.n();
  if (next == n) {
    DiffusionTrace trace = diffuse(inst.network, cur, inst.lambda);
    best.offer(trace.influenced_within(inst.lambda), cur);
    return;
  }
  // Include first so candidates appear in lexicographic order.
  const std::int64_t c = inst.network.cost(next);
  if (c <= left) {
    cur.push_back(next);
    enumerate(inst, next + 1, left - c, cur, best);
    cur.pop_back();
  }
  enumerate(inst, next + 1, left, cur, best);
}

}  // namespace

Solution brute_force_solve(const ProblemInstance& instance) {
  instance.validate();
  const int n = instance.network.n();
  if (n > kMaxBruteForceNodes) {
    throw SizeGuardError("brute forcing is capped at " + std::to_string(kMaxBruteForceNodes) +
                         " nodes (got " + std::to_string(n) + ")");
  }
  Best best;
  std::vector<NodeId> cur;
  enumerate(instance, 0, instance.budget, cur, best);
  return make_solution(instance.network, std::move(best.set), instance.lambda);
}

std::int64_t knapsack_dp(const std::vector<KnapsackItem>& items, std::int64_t capacity) {
  if (capacity < 0) throw InvalidArgumentError("knapsack capacity must be >= 0");
  for (const KnapsackItem& it : items) {
    if (it.profit < 0 || it.weight < 0) {
      throw InvalidArgumentError("knapsack items must have non-negative profit and weight");
    }
  }
  std::vector<std::int64_t> dp(capacity + 1, 0);
  for (const KnapsackItem& it : items) {
    for (std::int64_t w = capacity; w >= it.weight; --w) {
      dp[w] = std::max(dp[w], dp[w - it.weight] + it.profit);
    }
  }
  return dp[capacity];
}

}  // namespace latmax
