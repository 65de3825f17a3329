#ifndef LATMAX_SOLVER_TREE_HPP
#define LATMAX_SOLVER_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "latmax/extint.hpp"
#include "latmax/network.hpp"
#include "latmax/solution.hpp"
#include "latmax/util.hpp"

namespace latmax {

/// A tree rooted for the bottom-up DP. Children are ordered by ascending
/// id. residual_threshold(v) = max{t(v) - w(parent(v), v), 0}, and equals
/// t(v) at the root.
struct RootedTree {
  NodeId root = 0;
  std::vector<NodeId> parent;               // -1 at the root
  std::vector<std::vector<NodeId>> children;
  std::vector<std::int64_t> residual_threshold;
  std::vector<std::int64_t> up_weight;      // w(v, parent(v)), 0 at the root
  std::vector<std::int64_t> down_weight;    // w(parent(v), v), 0 at the root
  std::vector<NodeId> bottom_up_order;      // every node after all its children
};

/// Root chosen for determinism and shallow rootings: maximum in-degree,
/// lowest id on ties.
NodeId default_tree_root(const InfluenceNetwork& network);

/// Builds the rooted view. Throws PreconditionError if the undirected arc
/// support is not a tree.
RootedTree root_tree(const InfluenceNetwork& network, NodeId root);

/// Threshold slices of the per-node tables: the node's original threshold
/// or its residual threshold (parent already active).
enum TreeSlice : int { kSliceOrig = 0, kSliceResid = 1 };

struct TreeAChoice {
  std::int32_t split = -1;     // budget left of the prefix forest
  std::int16_t child_tau = -1; // tau row index of the chosen child cell
  std::int8_t child_slice = -1;
};

struct TreeCChoice {
  std::int32_t split = -1;
  std::int16_t child_tau = -1;
};

struct TreeBChoice {
  std::int32_t split = -1;
  std::int8_t branch = -1;  // 0: child contribution-free, 1: child active before tau
};

struct TreeDropChoice {
  std::int8_t kind = -1;  // 0: finite/seeded cell (aux = tau row), 1: late activation (aux = round), 2: infinity cell
  std::int16_t aux = -1;
};

/// Per-node DP tables.
///
/// mis[slice][tau_row][b] is the maximum number of nodes of the subtree
/// influenced within lambda rounds by a target set of cost at most b,
/// where tau_row 0 seeds the node, rows 1..lambda activate it through its
/// children by that round, and the last row leaves it uninfluenced. The
/// infinity row stores the children-only optimum even when no affordable
/// target set leaves the node uninfluenced; that stored value is always
/// dominated by a finite row, so every consumer is unaffected.
///
/// a[i][j]: node seeded, best over the first i+1 child subtrees with
/// forest budget j (allocated only for budgets 0..beta-1; the assembly
/// never queries j = beta because costs are >= 1 after normalization).
/// c[i][j]: node's influence ignored. b[tau-1][i][j][k]: children supply
/// at least k influence to the node by round tau-1, and see their residual
/// thresholds from round tau+1.
///
/// drop[tau-1][j] is the subtree optimum when the node's threshold falls
/// to its residual value from round tau+1 onward (the parent activates at
/// tau); it feeds the parent's contribution-free branch.
struct TreeNodeTables {
  std::int64_t t_orig = 0;
  std::int64_t t_resid = 0;

  Array3<ExtInt> mis;           // [slice][tau_row][b]
  Array3<std::int16_t> fin_arg;  // [slice][tau][b]: best tau' in {1..tau}, 0 if -inf

  Array2<ExtInt> a;
  Array2<TreeAChoice> a_ch;
  Array2<ExtInt> c;
  Array2<TreeCChoice> c_ch;
  std::vector<Array3<ExtInt>> b;        // per tau in 1..lambda
  std::vector<Array3<TreeBChoice>> b_ch;

  Array2<ExtInt> drop;          // [tau-1][j]
  Array2<TreeDropChoice> drop_ch;

  Array2<ExtInt> pref_orig;           // [tau][j]: max over tau' <= tau of mis[orig][tau'][j]
  Array2<std::int16_t> pref_orig_arg;  // tau row achieving it (first maximum)
};

struct TreeTables {
  RootedTree rooted;
  int lambda = 0;
  int beta = 0;  // effective budget: min(budget, total cost)
  std::vector<TreeNodeTables> nodes;
};

/// Exact pseudo-polynomial DP for weighted trees, O(Delta lambda^2 W
/// beta^3) overall; polynomial on unweighted trees. Requires every cost
/// >= 1 and every threshold at most W(v) + 1 (run normalize_zero_cost and
/// clamp_thresholds first); accepts any input whose undirected arc support
/// is a tree, paths included.
Solution solve_tree(const ProblemInstance& instance);
Solution solve_tree(const ProblemInstance& instance, const RootedTree& rooted);
Solution solve_tree(const ProblemInstance& instance, const RootedTree& rooted,
                    TreeTables* tables_out);

/// MIS table rendered as JSON (the --dump-tables payload).
std::string tree_tables_json(const TreeTables& tables,
                             const std::vector<NodeId>* original_ids = nullptr);

}  // namespace latmax

#endif
