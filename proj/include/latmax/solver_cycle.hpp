#ifndef LATMAX_SOLVER_CYCLE_HPP
#define LATMAX_SOLVER_CYCLE_HPP

#include "latmax/network.hpp"
#include "latmax/solution.hpp"

namespace latmax {

/// Exact O(n^3 lambda) solver for weighted cycles. For every affordable
/// node v_i it solves the path obtained by deleting v_i (neighbor
/// thresholds lowered by v_i's arc weights, budget reduced by c(v_i)),
/// re-simulates every candidate target set on the cycle itself, and keeps
/// the best; the empty set is always a candidate. Ties go to the smallest
/// position. Sub-instances run in parallel when LATMAX_THREADS allows.
Solution solve_cycle(const ProblemInstance& instance);

}  // namespace latmax

#endif
