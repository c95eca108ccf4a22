#ifndef EDP3_ORACLE_HPP
#define EDP3_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "edp3/instance.hpp"

namespace edp3 {

struct GenConfig {
  enum class Mode { kFeasible, kParityRepaired };

  int nodes = 8;
  int cycles = 1;       // extra closed walks (feasible mode) / edge budget (repaired)
  int trail_min = 1;    // per-demand trail length bounds
  int trail_max = 6;
  uint64_t seed = 1;
  Mode mode = Mode::kFeasible;
};

// Deterministic per seed. Feasible mode: the edge set is the union of one
// random trail per demand pair plus random closed walks, so the instance is
// Eulerian and feasible by construction. Parity-repaired mode: a random
// multigraph plus random demands, with the odd nodes of G+H paired up by
// extra edges; Eulerian but possibly infeasible.
Instance gen_instance(const GenConfig& cfg);

struct BruteForceResult {
  std::optional<Solution> solution;
  bool feasible() const { return solution.has_value(); }
};

// Exhaustive backtracking over edge-simple trails for the first two live
// pairs, connectivity for the last. Exact; throws above edge_bound.
BruteForceResult brute_force_solve(const Instance& inst, int edge_bound = 18);

struct CutCheckResult {
  std::optional<Witness> witness;
  bool satisfied() const { return !witness.has_value(); }
};

// Checks d_G(U) >= d_H(U) for every node subset; throws above node_bound.
CutCheckResult cut_condition_check(const Instance& inst, int node_bound = 20);

}  // namespace edp3

#endif  // EDP3_ORACLE_HPP
