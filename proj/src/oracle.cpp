#include "edp3/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "edp3/rng.hpp"
#include "edp3/solver.hpp"

namespace edp3 {

namespace {

// Adds a trail connecting s to t with roughly `len` edges (consecutive
// duplicates in the sampled node sequence are skipped).
void add_trail(MultiGraph& g, SplitMix64& rng, NodeId s, NodeId t, int len) {
  int n = g.node_count();
  if (s == t && len == 1) len = 2;
  NodeId prev = s;
  for (int i = 1; i < len; ++i) {
    NodeId x = static_cast<NodeId>(rng.below(n));
    if (x == prev) continue;
    g.add_edge(prev, x);
    prev = x;
  }
  if (len > 0 && prev != t) g.add_edge(prev, t);
}

void add_closed_walk(MultiGraph& g, SplitMix64& rng, int len) {
  int n = g.node_count();
  NodeId a = static_cast<NodeId>(rng.below(n));
  add_trail(g, rng, a, a, std::max(len, 2));
}

}  // namespace

Instance gen_instance(const GenConfig& cfg) {
  if (cfg.nodes < 2) throw std::invalid_argument("gen_instance: need at least 2 nodes");
  if (cfg.trail_min < 0 || cfg.trail_max < cfg.trail_min)
    throw std::invalid_argument("gen_instance: bad trail bounds");
  SplitMix64 rng(cfg.seed);
  Instance inst;
  inst.graph = MultiGraph(cfg.nodes);
  for (int i = 0; i < 3; ++i) {
    NodeId s = static_cast<NodeId>(rng.below(cfg.nodes));
    NodeId t = static_cast<NodeId>(rng.below(cfg.nodes));
    inst.demands.push_back({s, t, i + 1});
  }

  if (cfg.mode == GenConfig::Mode::kFeasible) {
    for (const DemandPair& d : inst.demands) {
      int len = rng.range(cfg.trail_min, cfg.trail_max);
      if (d.s != d.t && len == 0) len = 1;
      if (d.s == d.t && len == 1) len = 0;
      add_trail(inst.graph, rng, d.s, d.t, len);
    }
    for (int c = 0; c < cfg.cycles; ++c)
      add_closed_walk(inst.graph, rng, rng.range(std::max(2, cfg.trail_min),
                                                 std::max(2, cfg.trail_max)));
  } else {
    int edges = 0;
    for (int i = 0; i < 3; ++i) edges += rng.range(cfg.trail_min, cfg.trail_max);
    edges += 3 * cfg.cycles;
    for (int i = 0; i < edges; ++i) {
      NodeId u = static_cast<NodeId>(rng.below(cfg.nodes));
      NodeId v = static_cast<NodeId>(rng.below(cfg.nodes - 1));
      if (v >= u) ++v;
      inst.graph.add_edge(u, v);
    }
    // Pair up the odd nodes of G + H with a random perfect matching.
    std::vector<NodeId> odd;
    {
      std::vector<int> parity(cfg.nodes, 0);
      for (NodeId v = 0; v < cfg.nodes; ++v) parity[v] = inst.graph.degree(v) & 1;
      for (const DemandPair& d : inst.demands) {
        if (d.s == d.t) continue;
        parity[d.s] ^= 1;
        parity[d.t] ^= 1;
      }
      for (NodeId v = 0; v < cfg.nodes; ++v)
        if (parity[v]) odd.push_back(v);
    }
    assert(odd.size() % 2 == 0);
    for (size_t i = odd.size(); i > 1; --i)
      std::swap(odd[i - 1], odd[rng.below(i)]);
    for (size_t i = 0; i + 1 < odd.size(); i += 2)
      inst.graph.add_edge(odd[i], odd[i + 1]);
  }
  assert(is_eulerian(inst));
  return inst;
}

namespace {

// Backtracking over edge-simple trails. Pairs are satisfied in order; the
// last live pair only needs connectivity in what remains.
struct BruteSearch {
  const MultiGraph& g;
  std::vector<DemandPair> live;
  std::vector<char> used;
  std::vector<PathSeq> found;

  explicit BruteSearch(const Instance& inst) : g(inst.graph) {
    used.assign(g.edge_slots(), 0);
    for (EdgeId e = 0; e < g.edge_slots(); ++e)
      if (!g.edge_alive(e)) used[e] = 1;
    for (const DemandPair& d : inst.demands)
      if (d.s != d.t) live.push_back(d);
    found.resize(live.size());
  }

  bool connected_in_rest(NodeId s, NodeId t, PathSeq* out) {
    std::vector<char> visited(g.node_count(), 0);
    std::vector<EdgeId> parent(g.node_count(), -1);
    std::vector<NodeId> stack{s};
    visited[s] = 1;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (used[inc.edge] || visited[inc.other]) continue;
        visited[inc.other] = 1;
        parent[inc.other] = inc.edge;
        if (inc.other == t) {
          PathSeq p;
          for (NodeId w = t; w != s; w = g.other_end(parent[w], w)) {
            p.nodes.push_back(w);
            p.edges.push_back(parent[w]);
          }
          p.nodes.push_back(s);
          p.reverse();
          *out = std::move(p);
          return true;
        }
        stack.push_back(inc.other);
      }
    }
    return false;
  }

  bool satisfy(size_t idx) {
    if (idx == live.size()) return true;
    if (idx + 1 == live.size())
      return connected_in_rest(live[idx].s, live[idx].t, &found[idx]);
    PathSeq trail;
    trail.nodes.push_back(live[idx].s);
    return extend(idx, live[idx].s, live[idx].t, trail);
  }

  bool extend(size_t idx, NodeId cur, NodeId goal, PathSeq& trail) {
    if (cur == goal) {
      found[idx] = trail;
      if (satisfy(idx + 1)) return true;
    } else {
      for (const auto& inc : g.incident(cur)) {
        if (used[inc.edge]) continue;
        used[inc.edge] = 1;
        trail.edges.push_back(inc.edge);
        trail.nodes.push_back(inc.other);
        if (extend(idx, inc.other, goal, trail)) return true;
        trail.edges.pop_back();
        trail.nodes.pop_back();
        used[inc.edge] = 0;
      }
    }
    return false;
  }
};

}  // namespace

BruteForceResult brute_force_solve(const Instance& inst, int edge_bound) {
  if (inst.demands.size() != 3)
    throw std::invalid_argument("brute_force_solve: exactly three demand pairs required");
  if (inst.graph.live_edge_count() > edge_bound)
    throw std::invalid_argument("brute_force_solve: instance above the size bound");
  BruteSearch search(inst);
  if (!search.satisfy(0)) return {};
  Solution sol;
  size_t next_live = 0;
  for (int i = 0; i < 3; ++i) {
    if (inst.demands[i].s == inst.demands[i].t)
      sol.paths[i] = empty_path(inst.demands[i].s);
    else
      sol.paths[i] = search.found[next_live++];
  }
  assert(verify_solution(inst, sol));
  return {std::move(sol)};
}

CutCheckResult cut_condition_check(const Instance& inst, int node_bound) {
  int n = inst.graph.node_count();
  if (n > node_bound)
    throw std::invalid_argument("cut_condition_check: instance above the size bound");
  std::vector<char> in_u(n, 0);
  std::optional<Witness> best;
  for (uint64_t mask = 1; mask + 1 < (1ULL << n); ++mask) {
    for (NodeId v = 0; v < n; ++v) in_u[v] = (mask >> v) & 1;
    int dg = static_cast<int>(cut_edges_masked(inst.graph, in_u).size());
    int dh = demand_cut_count(inst, in_u);
    if (dg < dh) {
      std::vector<NodeId> cut;
      for (NodeId v = 0; v < n; ++v)
        if (in_u[v]) cut.push_back(v);
      if (!best || cut.size() < best->cut_set.size()) {
        Witness w;
        w.cut_set = std::move(cut);
        w.cut_capacity = dg;
        w.demand_crossing = dh;
        best = std::move(w);
      }
    }
  }
  return {std::move(best)};
}

}  // namespace edp3
