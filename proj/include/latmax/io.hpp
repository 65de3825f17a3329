#ifndef LATMAX_IO_HPP
#define LATMAX_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "latmax/network.hpp"
#include "latmax/reductions.hpp"
#include "latmax/solution.hpp"

namespace latmax {

/// Instance schema:
///   { "nodes": [{"id": int, "threshold": int, "cost": int}, ...],
///     "arcs":  [{"src": int, "dst": int, "weight": int}, ...],
///     "lambda": int, "budget": int }
/// Unknown top-level keys (e.g. generator metadata) are ignored.
ProblemInstance parse_instance_json(const std::string& text);
std::string instance_to_json(const ProblemInstance& instance,
                             const nlohmann::json& meta = nlohmann::json());

/// Solution schema:
///   { "target_set": [int], "cost": int, "influenced_count": int,
///     "activation_round": {"<id>": int | "inf"} }
std::string solution_to_json(const Solution& solution);
/// Reads back at least the target set (lenient about extra keys).
std::vector<NodeId> parse_solution_target_set(const std::string& text);

/// Trace emitted by the simulate command: the activation_round map plus
/// seeds, lambda, influenced_count and rounds_to_fixpoint.
std::string trace_to_json(const DiffusionTrace& trace, const std::vector<NodeId>& seeds);

/// Graph schema for the clique embedding:
///   { "n": int, "edges": [[u, v], ...], "thresholds": [int, ...] }
SimpleGraph parse_simple_graph_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace latmax

#endif
