#include "edp3/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "edp3/oracle.hpp"
#include "edp3/solver.hpp"

namespace edp3 {

double fit_loglog_slope(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("fit_loglog_slope: need >= 2 rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchRow& r : rows) {
    double x = std::log(static_cast<double>(r.edges));
    double y = std::log(std::max(r.seconds, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double k = static_cast<double>(rows.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

BenchResult run_bench(const std::vector<long long>& target_sizes, int runs,
                      uint64_t seed) {
  if (runs < 1) throw std::invalid_argument("run_bench: runs must be positive");
  BenchResult result;
  for (long long target : target_sizes) {
    GenConfig cfg;
    cfg.mode = GenConfig::Mode::kFeasible;
    cfg.nodes = static_cast<int>(std::max<long long>(8, target / 4));
    cfg.cycles = 3;
    // Three demand trails plus three closed walks of the same length.
    cfg.trail_min = cfg.trail_max = static_cast<int>(std::max<long long>(2, target / 6));
    long long median_edges = 0;
    std::vector<double> times;
    for (int run = 0; run < runs; ++run) {
      cfg.seed = seed + 7919 * static_cast<uint64_t>(run) + static_cast<uint64_t>(target);
      Instance inst = gen_instance(cfg);
      auto t0 = std::chrono::steady_clock::now();
      SolveOutcome out = solve(inst);
      auto t1 = std::chrono::steady_clock::now();
      if (!outcome_feasible(out))
        throw std::logic_error("run_bench: feasible-mode instance reported infeasible");
      times.push_back(std::chrono::duration<double>(t1 - t0).count());
      median_edges = inst.graph.live_edge_count();
    }
    std::sort(times.begin(), times.end());
    result.rows.push_back({median_edges, times[times.size() / 2]});
  }
  result.slope = fit_loglog_slope(result.rows);
  return result;
}

}  // namespace edp3
