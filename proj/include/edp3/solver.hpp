#ifndef EDP3_SOLVER_HPP
#define EDP3_SOLVER_HPP

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "edp3/instance.hpp"

namespace edp3 {

// Diagnostics collected along a solve; consumed by tests, the regression
// corpus search and the O(rm) accounting.
struct SolveStats {
  bool used_move_walk = false;
  int trace_length = 0;  // k, number of local moves applied
  bool level_k_feasible = false;
  int critical_index = -1;  // j
  bool reached_critical_cut = false;
  bool case_b = false;
  int critical_cut_skips = 0;  // signatures rejected by the connectivity filter
  long long dyn_arc_scans = 0;  // DynReach incidence scans across the j-search
  long long dyn_scan_budget = 0;  // sum of (r+1)*(arc slots + nodes + 1)
};

struct CheckResult {
  std::optional<Witness> witness;  // empty <=> feasible
  bool feasible() const { return !witness.has_value(); }
};

// Feasibility via signature enumeration: every separated-pair orientation
// pattern (at most 26 after skipping the empty one) is checked with a
// bounded max-flow on the auxiliary graph. Requires an Eulerian instance.
// O(m).
CheckResult check_feasible(const Instance& inst);

// Connected Eulerian two-pair instances are always feasible: trace any
// d1-path, remove it, trace the d2-path that parity forces to exist.
// Returned paths run from .s to .t. Violated preconditions throw.
std::pair<PathSeq, PathSeq> solve_two_pairs(const MultiGraph& g, DemandPair d1,
                                            DemandPair d2);

// Node-simple path by depth-first search, ties broken by incidence order.
// Throws when t is unreachable.
PathSeq trace_simple_path(const MultiGraph& g, NodeId s, NodeId t);

// Shortest path by breadth-first search, or nullopt when disconnected.
std::optional<PathSeq> bfs_path(const MultiGraph& g, NodeId s, NodeId t);

// The local-move walk along path 1: edges e_1..e_k and terminal positions
// p_0..p_k (p_0 = s1, p_k = t1).
struct MoveTrace {
  std::vector<EdgeId> edges;
  std::vector<NodeId> positions;
  int length() const { return static_cast<int>(edges.size()); }
};

MoveTrace trace_from_path(const PathSeq& p);

// Largest j such that (G_j, H_j) is feasible, given that level 0 is feasible
// and level k is not: one DynReach replay per signature pattern, undoing the
// moves in reverse order. O(m) thanks to per-signature monotonicity.
int find_critical_index(const Instance& level0, const MoveTrace& trace,
                        SolveStats* stats = nullptr);

// Terminal slots are numbered 0..5: slot = 2*pair + (0 for s, 1 for t).
NodeId slot_node(const Instance& inst, int slot);

struct CriticalCut {
  std::vector<NodeId> inside;             // U, sorted ascending
  EdgeId cut_edge[2] = {-1, -1};          // delta_G(U), ascending by id
  NodeId inside_end[2] = {-1, -1};        // u_i in U
  NodeId outside_end[2] = {-1, -1};       // v_i outside
  int slot_p = -1, slot_q = -1;           // the two terminal slots inside U
};

// Constructs a set U with d_G(U) = d_H(U) = 2, exactly two terminal slots
// inside and G[U] connected, by contracting candidate slot pairs and running
// bounded max-flow. Requires a connected Eulerian feasible three-pair
// instance sitting just before an infeasible local move; throws when no
// qualifying cut exists.
CriticalCut find_critical_cut(const Instance& inst, SolveStats* stats = nullptr);

// Assembles a full solution from a critical cut: two edge-disjoint paths
// across the cut (truncated at their unique crossings), a two-pair solve
// inside G[U], and the parity-forced third path.
Solution solve_critical(const Instance& inst, const CriticalCut& cut,
                        SolveStats* stats = nullptr);

using SolveOutcome = std::variant<Solution, Witness>;

inline bool outcome_feasible(const SolveOutcome& o) {
  return std::holds_alternative<Solution>(o);
}

// The complete pipeline: degenerate pairs satisfied by empty paths,
// component splitting, one/two-pair reductions, and for three pairs in one
// component the local-move walk with critical-instance construction.
// Requires an Eulerian instance with exactly three demand pairs. O(m).
SolveOutcome solve(const Instance& inst, SolveStats* stats = nullptr);

// O(m^2) reference: repeatedly applies the first feasible local move at the
// first terminal until its pair collapses, then reduces to two pairs.
SolveOutcome solve_quadratic(const Instance& inst);

}  // namespace edp3

#endif  // EDP3_SOLVER_HPP
