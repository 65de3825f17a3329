#ifndef LATMAX_ORACLE_HPP
#define LATMAX_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "latmax/network.hpp"
#include "latmax/solution.hpp"

namespace latmax {

/// Hard cap for brute-force enumeration.
inline constexpr int kMaxBruteForceNodes = 25;

/// Reference solver: enumerates every target set within budget (pruning on
/// remaining budget), simulates each, and returns a maximizer. Ties go to
/// the lexicographically smallest set. Exact by construction; refuses
/// instances above kMaxBruteForceNodes with a SizeGuardError.
Solution brute_force_solve(const ProblemInstance& instance);

struct KnapsackItem {
  std::int64_t profit = 0;
  std::int64_t weight = 0;
};

/// Classic 0-1 knapsack DP, O(items * capacity): maximum total profit of a
/// subset of items with total weight at most capacity.
std::int64_t knapsack_dp(const std::vector<KnapsackItem>& items, std::int64_t capacity);

}  // namespace latmax

#endif
