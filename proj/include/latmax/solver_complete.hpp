#ifndef LATMAX_SOLVER_COMPLETE_HPP
#define LATMAX_SOLVER_COMPLETE_HPP

#include "latmax/network.hpp"
#include "latmax/solution.hpp"

namespace latmax {

/// Exact linear-time solver for unweighted complete graphs with unit
/// costs: an optimal target set consists of the budget-many nodes with the
/// highest thresholds (lowest ids on ties), selected by counting since
/// thresholds lie in {0..n} after clamping.
///
/// Rejects weighted, incomplete, or non-unit-cost instances with a
/// PreconditionError pointing at the brute-force fallback; the weighted
/// complete case has no exact polynomial algorithm.
Solution solve_complete_unweighted(const ProblemInstance& instance);

}  // namespace latmax

#endif
