#ifndef LATMAX_GENERATOR_HPP
#define LATMAX_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <string>

#include "latmax/network.hpp"

namespace latmax {

/// Deterministic RNG: the mt19937_64 engine is pinned by the standard, and
/// bounded draws avoid std distributions (whose output is
/// implementation-defined), so identical seeds give identical instances on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

enum class GenTopology { kPath, kCycle, kTree, kComplete };

GenTopology gen_topology_from_string(const std::string& name);
const char* gen_topology_name(GenTopology t);

struct GenCaps {
  std::int64_t max_weight = 3;
  std::int64_t max_threshold = 5;
  std::int64_t max_cost = 3;
};

/// Random instance of the requested topology, deterministic in the seed.
/// Weights are uniform in {0..max_weight}, thresholds in
/// {0..max_threshold}, costs in {1..max_cost}. Trees occasionally drop one
/// arc direction (the support stays a tree); paths and cycles keep both
/// directions, as their classification requires. Complete instances are
/// unweighted with unit costs and thresholds in {0..n}.
ProblemInstance gen_random_instance(GenTopology topology, int n, std::uint64_t seed,
                                    const GenCaps& caps, int lambda, std::int64_t budget);

}  // namespace latmax

#endif
