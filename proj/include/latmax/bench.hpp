#ifndef LATMAX_BENCH_HPP
#define LATMAX_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace latmax {

struct BenchPoint {
  std::int64_t size = 0;
  double seconds = 0.0;
};

/// One measured scaling sweep. For doubling grids `exponent` is the
/// least-squares slope of log2(time) against log2(size);
/// `doubling_ratio` is time(last)/time(first) normalized per doubling.
struct BenchReport {
  std::string suite;
  std::vector<BenchPoint> points;
  double exponent = 0.0;
  double doubling_ratio = 0.0;
  double total_seconds = 0.0;
};

/// Suites: "path-n" (n doubles at fixed lambda), "path-lambda" (lambda
/// doubles at fixed n), "tree-beta" (budget doubles on a fixed tree;
/// reported as the single doubling ratio). Instances are generated from
/// fixed seeds; each point is the median of several runs.
BenchReport run_bench_suite(const std::string& suite);

std::vector<std::string> bench_suite_names();

std::string bench_report_json(const std::vector<BenchReport>& reports);

}  // namespace latmax

#endif
