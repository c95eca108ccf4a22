#ifndef EDP3_BENCH_HPP
#define EDP3_BENCH_HPP

#include <cstdint>
#include <vector>

namespace edp3 {

struct BenchRow {
  long long edges;     // actual edge count of the instance
  double seconds;      // median solve time
};

struct BenchResult {
  std::vector<BenchRow> rows;
  double slope = 0.0;  // fitted log-log slope
};

double fit_loglog_slope(const std::vector<BenchRow>& rows);

// Generates feasible-mode instances near each target size and times solve,
// taking the median of `runs` instances per size. Sequential by design so
// the timings are not co-scheduled.
BenchResult run_bench(const std::vector<long long>& target_sizes, int runs,
                      uint64_t seed);

}  // namespace edp3

#endif  // EDP3_BENCH_HPP
