#ifndef LATMAX_SOLVER_PATH_HPP
#define LATMAX_SOLVER_PATH_HPP

#include <cstdint>
#include <vector>

#include "latmax/extint.hpp"
#include "latmax/network.hpp"
#include "latmax/solution.hpp"

namespace latmax {

/// The path DP state. f(i, j, tau, t) is the minimum cost of a target set
/// within the first i nodes of the ordering that influences at least j of
/// them within lambda rounds while node v_i (threshold set to t) is
/// influenced within tau; tau = infinity places no constraint on v_i.
/// t ranges over the node's original threshold and its residual threshold
/// with respect to its right neighbor. Infeasible cells hold +infinity,
/// which happens exactly when j > i.
///
/// Choice records are always retained; the full value table only when
/// built via compute_path_tables.
class PathTables {
 public:
  int n() const { return n_; }
  int lambda() const { return lambda_; }
  const std::vector<NodeId>& ordering() const { return ordering_; }

  /// i is 1-based; slice 0 = original threshold, 1 = residual.
  ExtInt value(int i, int j, TauIndex tau, int slice) const;

  /// Witness set for a finite cell, as network node ids (sorted).
  std::vector<NodeId> reconstruct(int i, int j, TauIndex tau, int slice) const;

  std::int64_t threshold_orig(int pos) const { return t_orig_[pos]; }
  std::int64_t threshold_resid(int pos) const { return t_resid_[pos]; }

 private:
  friend class PathDp;
  int n_ = 0;
  int lambda_ = 0;
  std::vector<NodeId> ordering_;
  std::vector<std::int64_t> t_orig_, t_resid_, cost_, w_in_;
  std::vector<ExtInt> values_;     // full table, test/introspection builds only
  bool has_values_ = false;
  std::vector<ExtInt> last_slab_;  // i = n values
  std::vector<std::uint8_t> choices_;
};

/// Fills the whole table, keeping every cell value. O(n^2 lambda).
PathTables compute_path_tables(const ProblemInstance& instance);

/// Exact O(n^2 lambda) solver for weighted paths: the largest coverage k
/// whose minimum cost fits the budget, with the witness re-simulated.
/// Requires path topology and costs >= 1.
Solution solve_path(const ProblemInstance& instance);

/// Minimum cost of influencing at least alpha nodes within lambda rounds;
/// +infinity if alpha exceeds n. Requires alpha >= 0.
ExtInt min_cost_for_coverage(const ProblemInstance& instance, int alpha);
ExtInt min_cost_for_coverage(const PathTables& tables, int alpha);

}  // namespace latmax

#endif
