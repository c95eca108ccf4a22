// Randomized search for small instances whose solve trace reaches the
// critical-cut machinery. Findings are persisted as regression fixtures:
// one instance file per hit plus an index listing the observed case and
// the number of connectivity-filter skips. Run once; the fixture set is
// then fixed and consumed by the acceptance suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "edp3/instance_io.hpp"
#include "edp3/oracle.hpp"
#include "edp3/rng.hpp"
#include "edp3/solver.hpp"

using namespace edp3;

int main(int argc, char** argv) {
  CLI::App app{"search for critical-path regression fixtures"};
  std::string out_dir = "tests/fixtures/critical";
  uint64_t max_seeds = 2000000;
  int want_total = 30;
  int want_case_b = 8;
  int want_skips = 2;
  int max_edges = 16;
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seeds", max_seeds, "seed budget");
  app.add_option("--want-total", want_total, "instances reaching the critical cut");
  app.add_option("--want-case-b", want_case_b, "of which case B");
  app.add_option("--want-skips", want_skips, "of which with connectivity skips");
  app.add_option("--max-edges", max_edges, "instance size cap");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out_dir);
  std::ofstream index(out_dir + "/index.txt");
  if (!index) {
    std::cerr << "cannot write index in " << out_dir << '\n';
    return 2;
  }

  int total = 0, case_b = 0, with_skips = 0;
  for (uint64_t seed = 1; seed <= max_seeds; ++seed) {
    if (total >= want_total && case_b >= want_case_b && with_skips >= want_skips)
      break;
    SplitMix64 rng(seed * 0x9e3779b9ULL + 1);
    GenConfig cfg;
    cfg.seed = seed;
    cfg.nodes = 4 + static_cast<int>(rng.below(6));
    cfg.cycles = static_cast<int>(rng.below(2));
    cfg.trail_min = 1;
    cfg.trail_max = 2 + static_cast<int>(rng.below(3));
    cfg.mode = rng.below(4) == 0 ? GenConfig::Mode::kFeasible
                                 : GenConfig::Mode::kParityRepaired;
    Instance inst = gen_instance(cfg);
    if (inst.graph.live_edge_count() > max_edges) continue;

    SolveStats stats;
    SolveOutcome out;
    try {
      out = solve(inst, &stats);
    } catch (const std::exception& e) {
      std::cerr << "seed " << seed << ": solve failed: " << e.what() << '\n';
      return 1;
    }
    if (!stats.reached_critical_cut) continue;
    if (!outcome_feasible(out)) {
      std::cerr << "seed " << seed << ": critical cut on infeasible outcome\n";
      return 1;
    }
    // Cross-check against the exhaustive oracle while we are here.
    if (!brute_force_solve(inst).feasible()) {
      std::cerr << "seed " << seed << ": oracle disagrees\n";
      return 1;
    }
    bool keep = (stats.case_b && case_b < want_case_b) ||
                (stats.critical_cut_skips > 0 && with_skips < want_skips) ||
                total < want_total;
    if (!keep) continue;
    if (stats.case_b) ++case_b;
    if (stats.critical_cut_skips > 0) ++with_skips;
    ++total;
    char name[64];
    std::snprintf(name, sizeof(name), "critical_%03d.edp", total);
    save_instance(inst, out_dir + "/" + std::string(name));
    index << name << ' ' << (stats.case_b ? 'B' : 'A') << ' '
          << stats.critical_cut_skips << ' ' << stats.critical_index << '\n';
    std::cout << name << " seed=" << seed << " case=" << (stats.case_b ? 'B' : 'A')
              << " skips=" << stats.critical_cut_skips << " j=" << stats.critical_index
              << " k=" << stats.trace_length << '\n';
  }
  std::cout << "total=" << total << " caseB=" << case_b << " skips=" << with_skips
            << '\n';
  return (total >= want_total && case_b >= want_case_b) ? 0 : 3;
}
