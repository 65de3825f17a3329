#ifndef LATMAX_SOLVE_HPP
#define LATMAX_SOLVE_HPP

#include <string>

#include "latmax/network.hpp"
#include "latmax/solution.hpp"

namespace latmax {

enum class SolveMode { kAuto, kComplete, kTree, kPath, kCycle, kBrute };

SolveMode solve_mode_from_string(const std::string& name);

/// Full pipeline: normalize zero costs, clamp thresholds, detect the
/// topology, route to the matching exact solver (or to the forced one),
/// then merge the forced seeds back and re-simulate on the original
/// network. Auto mode refuses general topologies with an
/// UnsupportedTopologyError; kBrute forces the enumeration oracle.
Solution solve(const ProblemInstance& instance, SolveMode mode = SolveMode::kAuto);

}  // namespace latmax

#endif
