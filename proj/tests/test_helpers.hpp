#ifndef EDP3_TEST_HELPERS_HPP
#define EDP3_TEST_HELPERS_HPP

#include <vector>

#include "edp3/instance.hpp"
#include "edp3/rng.hpp"

namespace edp3::testing {

// Two nodes, three parallel edges, demands 3x(0,1).
inline Instance par3() {
  Instance inst;
  inst.graph = MultiGraph(2);
  for (int i = 0; i < 3; ++i) inst.graph.add_edge(0, 1);
  for (int i = 0; i < 3; ++i) inst.demands.push_back({0, 1, i + 1});
  return inst;
}

// One edge, demands 3x(0,1): the forced witness {0}.
inline Instance cut1() {
  Instance inst;
  inst.graph = MultiGraph(2);
  inst.graph.add_edge(0, 1);
  for (int i = 0; i < 3; ++i) inst.demands.push_back({0, 1, i + 1});
  return inst;
}

// K4 with demands (0,1), (0,2), (0,3).
inline Instance star_k4() {
  Instance inst;
  inst.graph = MultiGraph(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) inst.graph.add_edge(u, v);
  inst.demands = {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}};
  return inst;
}

// Uniform random multigraph (no demands).
inline MultiGraph random_graph(SplitMix64& rng, int nodes, int edges) {
  MultiGraph g(nodes);
  for (int i = 0; i < edges; ++i) {
    NodeId u = static_cast<NodeId>(rng.below(nodes));
    NodeId v = static_cast<NodeId>(rng.below(nodes - 1));
    if (v >= u) ++v;
    g.add_edge(u, v);
  }
  return g;
}

// Deterministic family forcing the full critical pipeline: a cycle
// q_0..q_L r_1..r_M back to q_0, a chord (q_0, q_L), demands (q_0, q_L) and
// twice (q_a, q_b) with 0 < a < b < L. The depth-first trace of path 1 is
// exactly the q-chain (its edges are inserted first); deleting it isolates
// q_a and q_b, so level k is infeasible, and every level >= 1 leaves q_a
// with a single dead-end escape, so the critical index is 0. The critical
// cut is U = {q_a} (or symmetrically {q_b}) with both inside slots on one
// node.
inline Instance ring_family(int chain_len, int return_len, int a, int b) {
  Instance inst;
  int L = chain_len, M = return_len;
  inst.graph = MultiGraph(L + 1 + M);
  for (int i = 1; i <= L; ++i) inst.graph.add_edge(i - 1, i);  // the q-chain
  inst.graph.add_edge(L, L + 1);
  for (int i = 2; i <= M; ++i) inst.graph.add_edge(L + i - 1, L + i);
  inst.graph.add_edge(L + M, 0);
  inst.graph.add_edge(0, L);  // chord
  inst.demands = {{0, L, 1}, {a, b, 2}, {a, b, 3}};
  return inst;
}

// Exhaustive minimum s-t cut capacity over all node subsets (Menger oracle).
inline int brute_min_cut(const MultiGraph& g, NodeId s, NodeId t) {
  int n = g.node_count();
  int best = -1;
  for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    if (!((mask >> s) & 1) || ((mask >> t) & 1)) continue;
    std::vector<char> in_u(n, 0);
    for (NodeId v = 0; v < n; ++v) in_u[v] = (mask >> v) & 1;
    int cap = static_cast<int>(cut_edges_masked(g, in_u).size());
    if (best < 0 || cap < best) best = cap;
  }
  return best;
}

}  // namespace edp3::testing

#endif  // EDP3_TEST_HELPERS_HPP
