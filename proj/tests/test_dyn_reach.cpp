#include "doctest.h"

#include <vector>

#include "edp3/dyn_reach.hpp"
#include "edp3/rng.hpp"
#include "test_helpers.hpp"

using namespace edp3;

namespace {

// Independent reverse reachability: nodes that can reach t in the residual
// digraph of f over g.
std::vector<char> reaches_sink(const MultiGraph& g, const BalancedArcSet& f, NodeId t) {
  std::vector<char> reach(g.node_count(), 0);
  std::vector<NodeId> stack{t};
  reach[t] = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(v)) {
      if (!g.edge_alive(inc.edge) || reach[inc.other]) continue;
      if (f.contains(arc_from(g, inc.edge, inc.other))) continue;
      reach[inc.other] = 1;
      stack.push_back(inc.other);
    }
  }
  return reach;
}

int offline_value(const MultiGraph& g, NodeId s, NodeId t, int r) {
  return bounded_max_flow(g, s, t, r).flow.value();
}

void check_consistent(const DynReach& d) {
  CHECK(d.query() == offline_value(d.graph(), d.source(), d.sink(), d.bound()));
  CHECK(balance_holds(d.graph(), d.flow()));
  CHECK(reverse_free(d.graph(), d.flow()));
  if (!d.saturated()) {
    auto reach = reaches_sink(d.graph(), d.flow(), d.sink());
    for (NodeId v = 0; v < d.graph().node_count(); ++v)
      CHECK(static_cast<bool>(reach[v]) == d.tree_covered(v));
    CHECK_FALSE(d.tree_covered(d.source()));
  }
}

long long scan_budget(const DynReach& d) {
  return static_cast<long long>(d.bound() + 1) *
         (2LL * d.graph().edge_slots() + d.graph().node_count() + 1);
}

}  // namespace

TEST_CASE("construction saturates when paths exist") {
  MultiGraph g(3);  // s=0 - a=2 - t=1
  g.add_edge(0, 2);
  g.add_edge(2, 1);
  DynReach d(g, 0, 1, 1);
  CHECK(d.saturated());
  CHECK(d.query() == 1);
}

TEST_CASE("construction with an unreachable sink") {
  MultiGraph g(3);
  g.add_edge(0, 2);  // t=1 isolated
  DynReach d(g, 0, 1, 1);
  CHECK_FALSE(d.saturated());
  CHECK(d.query() == 0);
  check_consistent(d);
}

TEST_CASE("constructor preconditions") {
  MultiGraph g(2);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(DynReach(g, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(DynReach(g, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("a move can connect the sink") {
  MultiGraph g(3);
  g.add_edge(0, 2);  // s=0 - v=2, t=1 isolated
  DynReach d(g, 0, 1, 1);
  CHECK(d.query() == 0);
  d.move(2, 1);  // now edges s-t and t-v
  CHECK(d.query() == 1);
  CHECK(d.saturated());
}

TEST_CASE("move preconditions") {
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  DynReach d(g, 0, 3, 2);
  CHECK_THROWS_AS(d.move(0, 1), std::invalid_argument);   // v == s
  CHECK_THROWS_AS(d.move(1, 0), std::invalid_argument);   // v' == s
  CHECK_THROWS_AS(d.move(1, 1), std::invalid_argument);   // loop
  CHECK_THROWS_AS(d.move(3, 1), std::invalid_argument);   // no s-v edge
}

TEST_CASE("saturated structures stay at the bound") {
  MultiGraph g(4);  // three parallel s-t edges plus a spare neighbour
  for (int i = 0; i < 3; ++i) g.add_edge(0, 1);
  g.add_edge(0, 2);
  DynReach d(g, 0, 1, 2);
  CHECK(d.saturated());
  CHECK(d.query() == 2);
  d.move(2, 3);
  CHECK(d.query() == 2);
  d.move(1, 3);  // even moving a flow-carrying edge keeps the value
  CHECK(d.query() == 2);
  CHECK(d.query() == offline_value(d.graph(), 0, 1, 2));
}

TEST_CASE("insert_edge grows coverage and can break through") {
  MultiGraph g(4);  // s=0 .. t=3 disconnected halves: 0-1, 2-3
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  DynReach d(g, 0, 3, 2);
  CHECK(d.query() == 0);
  check_consistent(d);
  d.insert_edge(1, 2);
  CHECK(d.query() == 1);
  check_consistent(d);
}

TEST_CASE("random scripts match offline recomputation") {
  SplitMix64 rng(2024);
  for (int script = 0; script < 60; ++script) {
    int n = 4 + static_cast<int>(rng.below(7));
    int m = 4 + static_cast<int>(rng.below(27));
    MultiGraph g = testing::random_graph(rng, n, m);
    NodeId s = 0, t = 1;
    int r = 1 + static_cast<int>(rng.below(3));
    DynReach d(g, s, t, r);
    check_consistent(d);
    int last = d.query();
    for (int op = 0; op < 50; ++op) {
      if (rng.below(4) == 0) {
        NodeId u = static_cast<NodeId>(rng.below(n));
        NodeId v = static_cast<NodeId>(rng.below(n - 1));
        if (v >= u) ++v;
        d.insert_edge(u, v);
      } else {
        // A legal move needs a live source edge to a non-source node.
        std::vector<NodeId> neighbours;
        for (const auto& inc : d.graph().incident(s))
          if (d.graph().edge_alive(inc.edge)) neighbours.push_back(inc.other);
        if (neighbours.empty()) break;
        NodeId v = neighbours[rng.below(neighbours.size())];
        NodeId v2 = static_cast<NodeId>(rng.below(n));
        if (v2 == s || v2 == v) continue;
        d.move(v, v2);
      }
      CHECK(d.query() >= last);  // monotone under moves and insertions
      last = d.query();
      check_consistent(d);
    }
    CHECK(d.arc_scans() <= 8 * scan_budget(d));
  }
}
