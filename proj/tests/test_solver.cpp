#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <set>

#include "edp3/instance_io.hpp"
#include "edp3/oracle.hpp"
#include "edp3/rng.hpp"
#include "edp3/solver.hpp"
#include "test_helpers.hpp"

using namespace edp3;
using edp3::testing::par3;
using edp3::testing::ring_family;

namespace {

Instance random_eulerian(SplitMix64& rng, int max_nodes = 9) {
  GenConfig cfg;
  cfg.seed = rng.next();
  cfg.nodes = 2 + static_cast<int>(rng.below(max_nodes - 1));
  cfg.cycles = static_cast<int>(rng.below(3));
  cfg.trail_min = 0;
  cfg.trail_max = 4;
  cfg.mode = rng.below(2) ? GenConfig::Mode::kFeasible
                          : GenConfig::Mode::kParityRepaired;
  return gen_instance(cfg);
}

}  // namespace

TEST_CASE("check_feasible on the basic instances") {
  CHECK(check_feasible(par3()).feasible());
  CheckResult res = check_feasible(testing::cut1());
  REQUIRE_FALSE(res.feasible());
  CHECK(res.witness->cut_set == std::vector<NodeId>{0});
  CHECK(res.witness->cut_capacity == 1);
  CHECK(res.witness->demand_crossing == 3);
}

TEST_CASE("check_feasible rejects non-Eulerian input") {
  Instance odd;
  odd.graph = MultiGraph(2);
  odd.graph.add_edge(0, 1);
  odd.demands = {{0, 1, 1}, {0, 1, 2}, {0, 0, 3}};
  CHECK_THROWS_AS(check_feasible(odd), std::invalid_argument);
}

TEST_CASE("check_feasible matches exhaustive cut enumeration") {
  SplitMix64 rng(31337);
  int infeasible_seen = 0;
  for (int iter = 0; iter < 500; ++iter) {
    Instance inst = random_eulerian(rng);
    CheckResult fast = check_feasible(inst);
    CutCheckResult slow = cut_condition_check(inst);
    CHECK(fast.feasible() == slow.satisfied());
    if (!fast.feasible()) {
      ++infeasible_seen;
      CHECK(witness_valid(inst, *fast.witness));
      // Eulerian parity: the violation gap is even.
      CHECK((fast.witness->demand_crossing - fast.witness->cut_capacity) % 2 == 0);
    }
  }
  CHECK(infeasible_seen > 10);
}

TEST_CASE("solve_two_pairs on parallel edges") {
  MultiGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  auto [p1, p2] = solve_two_pairs(g, {0, 1, 1}, {0, 1, 2});
  CHECK(p1.edges.size() == 1);
  CHECK(p2.edges.size() == 1);
  CHECK(p1.edges[0] != p2.edges[0]);
  CHECK(p1.front() == 0);
  CHECK(p1.back() == 1);
}

TEST_CASE("solve_two_pairs on crossing demands") {
  // Four-cycle plus both diagonals (K4): Eulerian with demands (0,2), (1,3).
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  auto [p1, p2] = solve_two_pairs(g, {0, 2, 1}, {1, 3, 2});
  CHECK(p1.front() == 0);
  CHECK(p1.back() == 2);
  CHECK(p2.front() == 1);
  CHECK(p2.back() == 3);
  CHECK(path_valid_in(g, p1));
  CHECK(path_valid_in(g, p2));
  std::set<EdgeId> used(p1.edges.begin(), p1.edges.end());
  for (EdgeId e : p2.edges) CHECK(used.insert(e).second);
}

TEST_CASE("solve_two_pairs with a degenerate first pair") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto [p1, p2] = solve_two_pairs(g, {1, 1, 1}, {0, 2, 2});
  CHECK(p1.empty());
  CHECK(p2.edges.size() == 2);
}

TEST_CASE("solve_two_pairs validates its preconditions") {
  MultiGraph disconnected(4);
  disconnected.add_edge(0, 1);
  CHECK_THROWS_AS(solve_two_pairs(disconnected, {0, 1, 1}, {2, 3, 2}),
                  std::invalid_argument);
  MultiGraph odd(3);
  odd.add_edge(0, 1);
  odd.add_edge(1, 2);
  // G + H degree at node 1 is odd: not Eulerian.
  CHECK_THROWS_AS(solve_two_pairs(odd, {0, 1, 1}, {0, 2, 2}), std::invalid_argument);
}

TEST_CASE("trace_simple_path is node-simple and follows insertion order") {
  SplitMix64 rng(5150);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 3 + static_cast<int>(rng.below(7));
    MultiGraph g = testing::random_graph(rng, n, 3 * n);
    auto labels = connected_components(g);
    NodeId s = 0, t = -1;
    for (NodeId v = 1; v < n; ++v)
      if (labels[v] == labels[0]) t = v;
    if (t < 0) continue;
    PathSeq p = trace_simple_path(g, s, t);
    CHECK(path_valid_in(g, p));
    std::set<NodeId> seen(p.nodes.begin(), p.nodes.end());
    CHECK(seen.size() == p.nodes.size());
  }
  // A chain inserted first is followed verbatim.
  MultiGraph g(5);
  for (int i = 1; i < 5; ++i) g.add_edge(i - 1, i);
  g.add_edge(0, 4);
  PathSeq p = trace_simple_path(g, 0, 4);
  CHECK(p.nodes == std::vector<NodeId>{0, 1, 2, 3, 4});
}

TEST_CASE("find_critical_index equals per-level offline feasibility") {
  SplitMix64 rng(777);
  int exercised = 0;
  for (int iter = 0; iter < 12000 && exercised < 120; ++iter) {
    Instance inst = random_eulerian(rng, 8);
    bool live = true;
    for (const DemandPair& d : inst.demands)
      if (d.s == d.t) live = false;
    if (!live) continue;
    // The terminals must share a component; other components are harmless.
    auto labels = connected_components(inst.graph);
    bool together = true;
    for (const DemandPair& d : inst.demands)
      together = together && labels[d.s] == labels[inst.demands[0].s] &&
                 labels[d.t] == labels[inst.demands[0].s];
    if (!together) continue;
    if (!check_feasible(inst).feasible()) continue;

    PathSeq p1 = trace_simple_path(inst.graph, inst.demands[0].s, inst.demands[0].t);
    MoveTrace trace = trace_from_path(p1);
    int k = trace.length();
    if (k == 0) continue;

    // Offline: check every level from scratch.
    auto level_feasible = [&](int level) {
      Instance copy = inst;
      for (int i = 0; i < level; ++i) copy.graph.remove_edge(trace.edges[i]);
      copy.demands[0].s = trace.positions[level];
      return check_feasible(copy).feasible();
    };
    if (level_feasible(k)) continue;
    ++exercised;
    int j_offline = 0;
    for (int level = k - 1; level >= 0; --level)
      if (level_feasible(level)) {
        j_offline = level;
        break;
      }
    SolveStats stats;
    int j = find_critical_index(inst, trace, &stats);
    CHECK(j == j_offline);
    CHECK(stats.dyn_arc_scans > 0);
    CHECK(stats.dyn_arc_scans <= 8 * stats.dyn_scan_budget);
  }
  CHECK(exercised >= 50);
}

TEST_CASE("the ring family walks the whole critical pipeline") {
  Instance inst = ring_family(8, 5, 3, 6);
  REQUIRE(is_eulerian(inst));
  REQUIRE(brute_force_solve(inst).feasible());
  SolveStats stats;
  SolveOutcome out = solve(inst, &stats);
  REQUIRE(outcome_feasible(out));
  CHECK(verify_solution(inst, std::get<Solution>(out)));
  CHECK(stats.used_move_walk);
  CHECK(stats.trace_length == 8);  // the full q-chain
  CHECK_FALSE(stats.level_k_feasible);
  CHECK(stats.critical_index == 0);
  CHECK(stats.reached_critical_cut);
}

TEST_CASE("find_critical_cut on the ring family") {
  Instance inst = ring_family(6, 4, 2, 4);
  CriticalCut cut = find_critical_cut(inst);
  std::vector<char> in_u(inst.graph.node_count(), 0);
  for (NodeId v : cut.inside) in_u[v] = 1;
  // The four defining properties: d_G(U) = d_H(U) = 2, exactly the two
  // chosen slots inside, and G[U] connected.
  CHECK(cut_edges_masked(inst.graph, in_u).size() == 2);
  CHECK(demand_cut_count(inst, in_u) == 2);
  CHECK(cut.slot_p / 2 != cut.slot_q / 2);
  CHECK(in_u[slot_node(inst, cut.slot_p)]);
  CHECK(in_u[slot_node(inst, cut.slot_q)]);
  int slots_inside = 0;
  for (int s = 0; s < 6; ++s) slots_inside += in_u[slot_node(inst, s)];
  CHECK(slots_inside == 2);
  // Both inside slots land on the doubled-demand terminal.
  CHECK(slot_node(inst, cut.slot_p) == slot_node(inst, cut.slot_q));
  // G[U] connectivity via a fresh reachability sweep.
  {
    std::vector<NodeId> stack{cut.inside[0]};
    std::vector<char> seen(inst.graph.node_count(), 0);
    seen[cut.inside[0]] = 1;
    size_t count = 1;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (const auto& e : inst.graph.incident(v)) {
        if (!inst.graph.edge_alive(e.edge) || !in_u[e.other] || seen[e.other])
          continue;
        seen[e.other] = 1;
        ++count;
        stack.push_back(e.other);
      }
    }
    CHECK(count == cut.inside.size());
  }
}

TEST_CASE("find_critical_cut reports non-critical instances") {
  CHECK_THROWS_AS(find_critical_cut(par3()), std::invalid_argument);
}

TEST_CASE("solve on the easy instances") {
  SolveOutcome star = solve(testing::star_k4());
  REQUIRE(outcome_feasible(star));
  CHECK(verify_solution(testing::star_k4(), std::get<Solution>(star)));

  SolveOutcome cut = solve(testing::cut1());
  REQUIRE_FALSE(outcome_feasible(cut));
  const Witness& w = std::get<Witness>(cut);
  CHECK(w.cut_set == std::vector<NodeId>{0});
  CHECK(w.cut_capacity == 1);
  CHECK(w.demand_crossing == 3);
}

TEST_CASE("solve handles degenerate pairs and split components") {
  // Three components: a single edge, a parallel triple, a doubled edge.
  Instance inst;
  inst.graph = MultiGraph(6);
  inst.graph.add_edge(0, 1);
  for (int i = 0; i < 3; ++i) inst.graph.add_edge(2, 3);
  inst.graph.add_edge(4, 5);
  inst.graph.add_edge(4, 5);
  inst.demands = {{0, 1, 1}, {2, 3, 2}, {4, 4, 3}};
  REQUIRE(is_eulerian(inst));
  SolveOutcome out = solve(inst);
  REQUIRE(outcome_feasible(out));
  const Solution& sol = std::get<Solution>(out);
  CHECK(verify_solution(inst, sol));
  CHECK(sol.paths[2].empty());
}

TEST_CASE("solve reports a witness for a split demand pair") {
  Instance inst;
  inst.graph = MultiGraph(4);
  inst.graph.add_edge(0, 1);
  inst.graph.add_edge(2, 3);
  inst.demands = {{0, 2, 1}, {1, 3, 2}, {0, 0, 3}};
  REQUIRE(is_eulerian(inst));
  SolveOutcome out = solve(inst);
  REQUIRE_FALSE(outcome_feasible(out));
  CHECK(witness_valid(inst, std::get<Witness>(out)));
}

TEST_CASE("solve rejects bad inputs") {
  Instance two_pairs = par3();
  two_pairs.demands.pop_back();
  CHECK_THROWS_AS(solve(two_pairs), std::invalid_argument);

  Instance odd = par3();
  odd.graph.add_edge(0, 1);  // four parallel edges: parity breaks
  CHECK_THROWS_AS(solve(odd), std::invalid_argument);
}

TEST_CASE("solve agrees with the exhaustive oracle on random instances") {
  SplitMix64 rng(424242);
  int infeasible = 0, feasible = 0;
  for (int iter = 0; iter < 300; ++iter) {
    Instance inst = random_eulerian(rng);
    if (inst.graph.live_edge_count() > 16) continue;
    SolveOutcome out = solve(inst);
    BruteForceResult oracle = brute_force_solve(inst);
    CHECK(outcome_feasible(out) == oracle.feasible());
    if (outcome_feasible(out)) {
      ++feasible;
      CHECK(verify_solution(inst, std::get<Solution>(out)));
    } else {
      ++infeasible;
      CHECK(witness_valid(inst, std::get<Witness>(out)));
    }
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 10);
}

TEST_CASE("a disconnected maximal min cut is skipped for another signature") {
  // Regression fixtures found by randomized search: on these instances at
  // least one candidate signature produces a maximal minimum cut whose
  // inside subgraph is disconnected, and the enumeration must move on.
  std::ifstream index(EDP3_FIXTURE_DIR "/critical/index.txt");
  REQUIRE(index);
  std::string name, kase;
  int skips, j, exercised = 0;
  while (index >> name >> kase >> skips >> j) {
    if (skips == 0) continue;
    Instance inst = load_instance(std::string(EDP3_FIXTURE_DIR "/critical/") + name);
    SolveStats stats;
    SolveOutcome out = solve(inst, &stats);
    REQUIRE(outcome_feasible(out));
    CHECK(verify_solution(inst, std::get<Solution>(out)));
    CHECK(stats.reached_critical_cut);
    CHECK(stats.critical_cut_skips > 0);
    ++exercised;
  }
  CHECK(exercised >= 1);
}

TEST_CASE("solve_quadratic basics and differential agreement") {
  CHECK(outcome_feasible(solve_quadratic(par3())));
  SolveOutcome cut = solve_quadratic(testing::cut1());
  REQUIRE_FALSE(outcome_feasible(cut));
  CHECK(witness_valid(testing::cut1(), std::get<Witness>(cut)));

  SplitMix64 rng(55);
  for (int iter = 0; iter < 100; ++iter) {
    Instance inst = random_eulerian(rng, 8);
    SolveOutcome fast = solve(inst);
    SolveOutcome slow = solve_quadratic(inst);
    CHECK(outcome_feasible(fast) == outcome_feasible(slow));
    if (outcome_feasible(slow))
      CHECK(verify_solution(inst, std::get<Solution>(slow)));
  }
}
