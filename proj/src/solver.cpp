#include "edp3/solver.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>
#include <string>

#include "edp3/dyn_reach.hpp"
#include "edp3/flow.hpp"

namespace edp3 {

namespace {

// ---------------------------------------------------------------- subgraphs

// Induced sub-instance with translation maps back to the parent ids.
struct SubInstance {
  Instance inst;
  std::vector<NodeId> node_to_orig;
  std::vector<EdgeId> edge_to_orig;
  std::vector<NodeId> orig_to_sub;  // -1 when dropped
};

SubInstance extract_subgraph(const MultiGraph& g, const std::vector<char>& keep,
                             const std::vector<DemandPair>& demands) {
  SubInstance sub;
  sub.orig_to_sub.assign(g.node_count(), -1);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!keep[v]) continue;
    sub.orig_to_sub[v] = static_cast<NodeId>(sub.node_to_orig.size());
    sub.node_to_orig.push_back(v);
  }
  sub.inst.graph = MultiGraph(static_cast<int>(sub.node_to_orig.size()));
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge_alive(e)) continue;
    NodeId u = g.edge_u(e), v = g.edge_v(e);
    if (!keep[u] || !keep[v]) continue;
    sub.inst.graph.add_edge(sub.orig_to_sub[u], sub.orig_to_sub[v]);
    sub.edge_to_orig.push_back(e);
  }
  for (const DemandPair& d : demands) {
    assert(keep[d.s] && keep[d.t]);
    sub.inst.demands.push_back(
        {sub.orig_to_sub[d.s], sub.orig_to_sub[d.t], d.original_index});
  }
  return sub;
}

PathSeq translate_path(const SubInstance& sub, const PathSeq& p) {
  PathSeq out;
  out.nodes.reserve(p.nodes.size());
  out.edges.reserve(p.edges.size());
  for (NodeId v : p.nodes) out.nodes.push_back(sub.node_to_orig[v]);
  for (EdgeId e : p.edges) out.edges.push_back(sub.edge_to_orig[e]);
  return out;
}

std::vector<NodeId> translate_nodes(const SubInstance& sub,
                                    const std::vector<NodeId>& nodes) {
  std::vector<NodeId> out;
  out.reserve(nodes.size());
  for (NodeId v : nodes) out.push_back(sub.node_to_orig[v]);
  return out;
}

// Joins two walks sharing a node: a.back() == b.front().
PathSeq concat_walks(const PathSeq& a, const PathSeq& b) {
  assert(a.back() == b.front());
  PathSeq out = a;
  out.nodes.insert(out.nodes.end(), b.nodes.begin() + 1, b.nodes.end());
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

// Joins a, the edge (a.back(), b.front()), and b.
PathSeq concat_via_edge([[maybe_unused]] const MultiGraph& g, const PathSeq& a,
                        EdgeId e, const PathSeq& b) {
  assert(g.is_endpoint(e, a.back()) && g.is_endpoint(e, b.front()) &&
         g.other_end(e, a.back()) == b.front());
  PathSeq out = a;
  out.edges.push_back(e);
  out.nodes.insert(out.nodes.end(), b.nodes.begin(), b.nodes.end());
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

// ------------------------------------------------------- signature patterns

// Per pair: 0 = not separated, 1 = s-slot on the source side, 2 = t-slot on
// the source side.
struct Pattern {
  std::array<int, 3> state{0, 0, 0};
  int pair_count = 0;

  int separated() const {
    int k = 0;
    for (int i = 0; i < pair_count; ++i) k += state[i] != 0;
    return k;
  }
};

std::vector<Pattern> all_patterns(int pair_count) {
  int total = 1;
  for (int i = 0; i < pair_count; ++i) total *= 3;
  std::vector<Pattern> out;
  for (int code = 1; code < total; ++code) {
    Pattern p;
    p.pair_count = pair_count;
    int c = code;
    for (int i = 0; i < pair_count; ++i) {
      p.state[i] = c % 3;
      c /= 3;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

NodeId slot_node(const Instance& inst, int slot) {
  const DemandPair& d = inst.demands.at(slot / 2);
  return (slot % 2) ? d.t : d.s;
}

// ------------------------------------------------------------ path tracing

PathSeq trace_simple_path(const MultiGraph& g, NodeId s, NodeId t) {
  if (!g.valid_node(s) || !g.valid_node(t))
    throw std::invalid_argument("trace_simple_path: invalid terminal");
  if (s == t) return empty_path(s);
  std::vector<char> visited(g.node_count(), 0);
  std::vector<EdgeId> parent(g.node_count(), -1);
  std::vector<int> cursor(g.node_count(), 0);
  std::vector<NodeId> stack{s};
  visited[s] = 1;
  bool reached = false;
  while (!stack.empty() && !reached) {
    NodeId v = stack.back();
    const auto& inc = g.incident(v);
    bool advanced = false;
    while (cursor[v] < static_cast<int>(inc.size())) {
      const auto& entry = inc[cursor[v]++];
      if (!g.edge_alive(entry.edge) || visited[entry.other]) continue;
      visited[entry.other] = 1;
      parent[entry.other] = entry.edge;
      if (entry.other == t)
        reached = true;
      else
        stack.push_back(entry.other);
      advanced = true;
      break;
    }
    if (!advanced) stack.pop_back();
  }
  if (!reached) throw std::invalid_argument("trace_simple_path: t unreachable");
  PathSeq p;
  for (NodeId v = t; v != s; v = g.other_end(parent[v], v)) {
    p.nodes.push_back(v);
    p.edges.push_back(parent[v]);
  }
  p.nodes.push_back(s);
  p.reverse();
  return p;
}

std::optional<PathSeq> bfs_path(const MultiGraph& g, NodeId s, NodeId t) {
  if (!g.valid_node(s) || !g.valid_node(t))
    throw std::invalid_argument("bfs_path: invalid terminal");
  if (s == t) return empty_path(s);
  std::vector<char> visited(g.node_count(), 0);
  std::vector<EdgeId> parent(g.node_count(), -1);
  std::vector<NodeId> queue{s};
  visited[s] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    NodeId v = queue[head];
    for (const auto& entry : g.incident(v)) {
      if (!g.edge_alive(entry.edge) || visited[entry.other]) continue;
      visited[entry.other] = 1;
      parent[entry.other] = entry.edge;
      if (entry.other == t) {
        PathSeq p;
        for (NodeId w = t; w != s; w = g.other_end(parent[w], w)) {
          p.nodes.push_back(w);
          p.edges.push_back(parent[w]);
        }
        p.nodes.push_back(s);
        p.reverse();
        return p;
      }
      queue.push_back(entry.other);
    }
  }
  return std::nullopt;
}

MoveTrace trace_from_path(const PathSeq& p) {
  MoveTrace t;
  t.edges = p.edges;
  t.positions = p.nodes;
  return t;
}

// -------------------------------------------------------- feasibility check

CheckResult check_feasible(const Instance& inst) {
  if (inst.demands.size() > 3)
    throw std::invalid_argument("check_feasible: more than three demand pairs");
  if (!is_eulerian(inst))
    throw std::invalid_argument("check_feasible: instance is not Eulerian");
  int n = inst.graph.node_count();
  MultiGraph aux = inst.graph;
  NodeId S = aux.add_node();
  NodeId T = aux.add_node();
  std::optional<Witness> best;
  for (const Pattern& pat : all_patterns(static_cast<int>(inst.demands.size()))) {
    int k = pat.separated();
    std::vector<EdgeId> added;
    for (size_t i = 0; i < inst.demands.size(); ++i) {
      if (pat.state[i] == 0) continue;
      NodeId src_side = pat.state[i] == 1 ? inst.demands[i].s : inst.demands[i].t;
      NodeId snk_side = pat.state[i] == 1 ? inst.demands[i].t : inst.demands[i].s;
      added.push_back(aux.add_edge(S, src_side));
      added.push_back(aux.add_edge(snk_side, T));
    }
    FlowResult res = bounded_max_flow(aux, S, T, k);
    for (EdgeId e : added) aux.remove_edge(e);
    if (res.saturated) continue;
    // This orientation pattern certifies infeasibility; keep the smallest
    // violated cut seen.
    std::vector<NodeId> cut;
    for (NodeId v : *res.min_cut)
      if (v < n) cut.push_back(v);
    Witness w = make_witness(inst, std::move(cut));
    assert(w.cut_capacity < w.demand_crossing);
    if (!best || w.cut_set.size() < best->cut_set.size()) best = std::move(w);
  }
  return {std::move(best)};
}

// ---------------------------------------------------------------- two pairs

std::pair<PathSeq, PathSeq> solve_two_pairs(const MultiGraph& g, DemandPair d1,
                                            DemandPair d2) {
  if (!g.valid_node(d1.s) || !g.valid_node(d1.t) || !g.valid_node(d2.s) ||
      !g.valid_node(d2.t))
    throw std::invalid_argument("solve_two_pairs: invalid terminal");
  {
    auto labels = connected_components(g);
    for (int l : labels)
      if (l != 0) throw std::invalid_argument("solve_two_pairs: graph is not connected");
    Instance check{g, {d1, d2}};
    if (!is_eulerian(check))
      throw std::invalid_argument("solve_two_pairs: instance is not Eulerian");
  }
  if (d1.s == d1.t) {
    auto p2 = bfs_path(g, d2.s, d2.t);
    assert(p2);  // connected
    return {empty_path(d1.s), std::move(*p2)};
  }
  auto p1 = bfs_path(g, d1.s, d1.t);
  assert(p1);
  MultiGraph rest = g;
  for (EdgeId e : p1->edges) rest.remove_edge(e);
  auto p2 = bfs_path(rest, d2.s, d2.t);
  if (!p2)
    throw std::logic_error("solve_two_pairs: parity argument failed (bad input?)");
  return {std::move(*p1), std::move(*p2)};
}

// ------------------------------------------------------------- the j-search

int find_critical_index(const Instance& level0, const MoveTrace& trace,
                        SolveStats* stats) {
  if (level0.demands.size() != 3)
    throw std::invalid_argument("find_critical_index: three demand pairs required");
  int k = trace.length();
  if (k == 0 || trace.positions.size() != static_cast<size_t>(k) + 1)
    throw std::invalid_argument("find_critical_index: malformed trace");

  // Level-k template: the walk's edges removed, pair 1 collapsed onto t1.
  MultiGraph gk = level0.graph;
  for (EdgeId e : trace.edges) gk.remove_edge(e);

  int j_min = k;
  for (const Pattern& pat : all_patterns(3)) {
    int r = pat.separated();
    MultiGraph aux = gk;
    NodeId S = aux.add_node();
    NodeId T = aux.add_node();
    for (int i = 0; i < 3; ++i) {
      if (pat.state[i] == 0) continue;
      // Pair 1's moving slot currently sits at p_k.
      NodeId s_slot = (i == 0) ? trace.positions[k] : level0.demands[i].s;
      NodeId t_slot = level0.demands[i].t;
      NodeId src_side = pat.state[i] == 1 ? s_slot : t_slot;
      NodeId snk_side = pat.state[i] == 1 ? t_slot : s_slot;
      aux.add_edge(S, src_side);
      aux.add_edge(snk_side, T);
    }
    bool moving_slot_attached = pat.state[0] != 0;
    bool moving_on_sink_side = pat.state[0] == 2;
    NodeId src = S, snk = T;
    if (moving_slot_attached && moving_on_sink_side) std::swap(src, snk);

    DynReach dyn(std::move(aux), src, snk, r);
    int j_pat = -1;
    if (dyn.query() >= r) {
      j_pat = k;
    } else {
      for (int i = k - 1; i >= 0; --i) {
        NodeId v = trace.positions[i + 1];
        NodeId v_prev = trace.positions[i];
        if (moving_slot_attached)
          dyn.move(v, v_prev);  // relocates the auxiliary edge, restores e_{i+1}
        else
          dyn.insert_edge(v_prev, v);  // restores e_{i+1}
        if (dyn.query() >= r) {
          j_pat = i;
          break;
        }
      }
    }
    if (j_pat < 0)
      throw std::invalid_argument(
          "find_critical_index: level 0 infeasible for a signature");
    j_min = std::min(j_min, j_pat);
    if (stats) {
      stats->dyn_arc_scans += dyn.arc_scans();
      stats->dyn_scan_budget +=
          static_cast<long long>(r + 1) *
          (2LL * dyn.graph().edge_slots() + dyn.graph().node_count() + 1);
    }
  }
  if (j_min >= k)
    throw std::invalid_argument("find_critical_index: level k is feasible");
  return j_min;
}

// ------------------------------------------------------------- critical cut

CriticalCut find_critical_cut(const Instance& inst, SolveStats* stats) {
  if (inst.demands.size() != 3)
    throw std::invalid_argument("find_critical_cut: three demand pairs required");
  if (!is_eulerian(inst))
    throw std::invalid_argument("find_critical_cut: instance is not Eulerian");
  {
    auto labels = connected_components(inst.graph);
    for (int l : labels)
      if (l != 0)
        throw std::invalid_argument("find_critical_cut: graph is not connected");
  }
  int n = inst.graph.node_count();
  std::array<NodeId, 6> sn;
  for (int s = 0; s < 6; ++s) sn[s] = slot_node(inst, s);

  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      if (a / 2 == b / 2) continue;  // slots of one demand pair
      NodeId p = sn[a], q = sn[b];
      bool conflict = false;
      for (int s = 0; s < 6 && !conflict; ++s)
        if (s != a && s != b && (sn[s] == p || sn[s] == q)) conflict = true;
      if (conflict) continue;  // a node cannot sit on both sides

      // Contract {p, q} -> S and the other four slots -> T.
      std::vector<NodeId> cn(n, -1);
      cn[p] = 0;
      cn[q] = 0;
      for (int s = 0; s < 6; ++s)
        if (s != a && s != b) cn[sn[s]] = 1;
      int next = 2;
      for (NodeId v = 0; v < n; ++v)
        if (cn[v] < 0) cn[v] = next++;
      MultiGraph cg(next);
      for (EdgeId e = 0; e < inst.graph.edge_slots(); ++e) {
        if (!inst.graph.edge_alive(e)) continue;
        NodeId cu = cn[inst.graph.edge_u(e)], cv = cn[inst.graph.edge_v(e)];
        if (cu == cv) continue;  // contracted away
        cg.add_edge(cu, cv);
      }

      FlowResult res = bounded_max_flow(cg, 0, 1, 3);
      if (res.saturated) continue;  // min cut >= 3 for this signature
      if (res.flow.value() != 2)
        throw std::logic_error(
            "find_critical_cut: cut of capacity < 2 found; instance infeasible?");
      std::vector<NodeId> cut_c = maximal_min_cut(cg, res);
      std::vector<char> in_uc(next, 0);
      for (NodeId v : cut_c) in_uc[v] = 1;
      std::vector<char> in_u(n, 0);
      std::vector<NodeId> inside;
      for (NodeId v = 0; v < n; ++v)
        if (in_uc[cn[v]]) {
          in_u[v] = 1;
          inside.push_back(v);
        }

      // Connectivity filter on G[U].
      std::vector<char> seen(n, 0);
      std::vector<NodeId> stack{p};
      seen[p] = 1;
      size_t count = 1;
      while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (const auto& entry : inst.graph.incident(v)) {
          if (!inst.graph.edge_alive(entry.edge)) continue;
          if (!in_u[entry.other] || seen[entry.other]) continue;
          seen[entry.other] = 1;
          ++count;
          stack.push_back(entry.other);
        }
      }
      if (count != inside.size()) {
        if (stats) ++stats->critical_cut_skips;
        continue;
      }

      std::vector<EdgeId> crossing = cut_edges_masked(inst.graph, in_u);
      assert(crossing.size() == 2);
      CriticalCut cut;
      cut.inside = std::move(inside);
      cut.slot_p = a;
      cut.slot_q = b;
      for (int i = 0; i < 2; ++i) {
        EdgeId e = crossing[i];
        cut.cut_edge[i] = e;
        if (in_u[inst.graph.edge_u(e)]) {
          cut.inside_end[i] = inst.graph.edge_u(e);
          cut.outside_end[i] = inst.graph.edge_v(e);
        } else {
          cut.inside_end[i] = inst.graph.edge_v(e);
          cut.outside_end[i] = inst.graph.edge_u(e);
        }
      }
      return cut;
    }
  }
  throw std::invalid_argument(
      "find_critical_cut: no qualifying cut (instance is not critical)");
}

// --------------------------------------------------------- final assembly

Solution solve_critical(const Instance& inst, const CriticalCut& cut,
                        SolveStats* stats) {
  if (inst.demands.size() != 3)
    throw std::invalid_argument("solve_critical: three demand pairs required");
  int pair_a = cut.slot_p / 2;
  int pair_b = cut.slot_q / 2;
  if (pair_a == pair_b || cut.slot_p < 0 || cut.slot_q > 5)
    throw std::invalid_argument("solve_critical: malformed cut");
  int pair_c = 3 - pair_a - pair_b;

  // Inside terminals of the two separated pairs and their outside mates.
  NodeId inside_s[2] = {slot_node(inst, cut.slot_p), slot_node(inst, cut.slot_q)};
  NodeId outside_t[2] = {slot_node(inst, cut.slot_p ^ 1),
                         slot_node(inst, cut.slot_q ^ 1)};

  // Two edge-disjoint paths from the cut ends to the outside mates.
  MultiGraph ag = inst.graph;
  NodeId S = ag.add_node();
  NodeId T = ag.add_node();
  ag.add_edge(S, cut.inside_end[0]);
  ag.add_edge(S, cut.inside_end[1]);
  EdgeId aux_t[2] = {ag.add_edge(outside_t[0], T), ag.add_edge(outside_t[1], T)};
  FlowResult res = bounded_max_flow(ag, S, T, 2);
  if (!res.saturated)
    throw std::logic_error("solve_critical: fewer than two cross paths (upstream bug)");
  Decomposition dec = decompose(ag, res.flow);
  assert(dec.st_paths.size() == 2 && dec.ts_paths.empty());

  // Truncate each path at its unique crossing of delta_G(U); record which
  // outside mate the remainder reaches.
  struct Segment {
    int t_role = -1;
    PathSeq outside;
    bool set = false;
  };
  Segment seg[2];
  for (const std::vector<ArcId>& arcs : dec.st_paths) {
    std::vector<NodeId> nodes = arc_path_nodes(ag, S, arcs);
    int cross_pos = -1, cross_idx = -1, crossings = 0;
    for (size_t i = 0; i < arcs.size(); ++i) {
      EdgeId e = arc_edge(arcs[i]);
      if (e == cut.cut_edge[0] || e == cut.cut_edge[1]) {
        ++crossings;
        cross_pos = static_cast<int>(i);
        cross_idx = e == cut.cut_edge[0] ? 0 : 1;
      }
    }
    assert(crossings == 1);
    EdgeId last = arc_edge(arcs.back());
    assert(last == aux_t[0] || last == aux_t[1]);
    int t_role = last == aux_t[0] ? 0 : 1;
    assert(!seg[cross_idx].set);
    seg[cross_idx].set = true;
    seg[cross_idx].t_role = t_role;
    PathSeq& out = seg[cross_idx].outside;
    for (size_t i = cross_pos + 1; i + 1 < arcs.size(); ++i)
      out.edges.push_back(arc_edge(arcs[i]));
    out.nodes.assign(nodes.begin() + cross_pos + 1, nodes.end() - 1);
    assert(out.front() == cut.outside_end[cross_idx]);
    assert(out.back() == outside_t[t_role]);
  }
  assert(seg[0].set && seg[1].set && seg[0].t_role != seg[1].t_role);
  bool case_b = seg[0].t_role != 0;
  if (stats) stats->case_b = case_b;

  // Role i exits through this cut edge.
  int cross_of[2];
  cross_of[0] = case_b ? 1 : 0;
  cross_of[1] = case_b ? 0 : 1;

  // Two-pair instance inside G[U].
  std::vector<char> in_u(inst.graph.node_count(), 0);
  for (NodeId v : cut.inside) in_u[v] = 1;
  SubInstance usub = extract_subgraph(inst.graph, in_u, {});
  DemandPair din[2];
  for (int role = 0; role < 2; ++role)
    din[role] = {usub.orig_to_sub[inside_s[role]],
                 usub.orig_to_sub[cut.inside_end[cross_of[role]]], role + 1};
  auto [ip0, ip1] = solve_two_pairs(usub.inst.graph, din[0], din[1]);
  PathSeq inside_path[2] = {translate_path(usub, ip0), translate_path(usub, ip1)};

  Solution sol;
  for (int role = 0; role < 2; ++role) {
    int c = cross_of[role];
    assert(inside_path[role].front() == inside_s[role]);
    assert(inside_path[role].back() == cut.inside_end[c]);
    PathSeq full = concat_via_edge(inst.graph, inside_path[role],
                                   cut.cut_edge[c], seg[c].outside);
    sol.paths[role == 0 ? pair_a : pair_b] = std::move(full);
  }

  // Parity forces the remaining path to exist after the first two are gone.
  MultiGraph rest = inst.graph;
  for (int i : {pair_a, pair_b})
    for (EdgeId e : sol.paths[i].edges) rest.remove_edge(e);
  const DemandPair& dc = inst.demands[pair_c];
  if (dc.s == dc.t) {
    sol.paths[pair_c] = empty_path(dc.s);
  } else {
    auto p3 = bfs_path(rest, dc.s, dc.t);
    if (!p3) throw std::logic_error("solve_critical: third path missing (upstream bug)");
    sol.paths[pair_c] = std::move(*p3);
  }
  return sol;
}

// ------------------------------------------------------------ the pipeline

namespace {

// Solves demands that sit at most two per connected component. Paths are
// returned in the order given. Degenerate pairs get empty paths.
std::vector<PathSeq> solve_by_components(const MultiGraph& g,
                                         const std::vector<DemandPair>& demands) {
  std::vector<PathSeq> out(demands.size());
  auto labels = connected_components(g);
  int comp_count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<int>> group(comp_count);
  for (size_t i = 0; i < demands.size(); ++i) {
    if (demands[i].s == demands[i].t) {
      out[i] = empty_path(demands[i].s);
      continue;
    }
    if (labels[demands[i].s] != labels[demands[i].t])
      throw std::logic_error("solve_by_components: pair spans components");
    group[labels[demands[i].s]].push_back(static_cast<int>(i));
  }
  for (int c = 0; c < comp_count; ++c) {
    if (group[c].empty()) continue;
    std::vector<char> keep(g.node_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) keep[v] = labels[v] == c;
    std::vector<DemandPair> local;
    for (int i : group[c]) local.push_back(demands[i]);
    SubInstance sub = extract_subgraph(g, keep, local);
    if (group[c].size() == 1) {
      auto p = bfs_path(sub.inst.graph, sub.inst.demands[0].s, sub.inst.demands[0].t);
      assert(p);
      out[group[c][0]] = translate_path(sub, *p);
    } else if (group[c].size() == 2) {
      auto [p1, p2] =
          solve_two_pairs(sub.inst.graph, sub.inst.demands[0], sub.inst.demands[1]);
      out[group[c][0]] = translate_path(sub, p1);
      out[group[c][1]] = translate_path(sub, p2);
    } else {
      throw std::logic_error("solve_by_components: more than two pairs in a component");
    }
  }
  return out;
}

// Three live pairs in one connected component: the local-move walk along
// path 1, then either the easy two-pair tail or the critical machinery.
// Paths come back in the instance's demand order; a Witness is in the
// instance's node ids.
std::variant<std::array<PathSeq, 3>, Witness> three_pair_pipeline(
    const Instance& inst, SolveStats* stats) {
  CheckResult chk = check_feasible(inst);
  if (!chk.feasible()) return *chk.witness;

  PathSeq p1 = trace_simple_path(inst.graph, inst.demands[0].s, inst.demands[0].t);
  MoveTrace trace = trace_from_path(p1);
  int k = trace.length();
  if (stats) {
    stats->used_move_walk = true;
    stats->trace_length = k;
  }

  MultiGraph walk = inst.graph;
  for (EdgeId e : trace.edges) walk.remove_edge(e);
  {
    auto labels = connected_components(walk);
    const DemandPair& d1 = inst.demands[1];
    const DemandPair& d2 = inst.demands[2];
    bool feasible_k =
        labels[d1.s] == labels[d1.t] && labels[d2.s] == labels[d2.t];
    if (feasible_k) {
      if (stats) stats->level_k_feasible = true;
      auto tail = solve_by_components(walk, {d1, d2});
      return std::array<PathSeq, 3>{std::move(p1), std::move(tail[0]),
                                    std::move(tail[1])};
    }
  }

  int j = find_critical_index(inst, trace, stats);
  if (stats) stats->critical_index = j;

  Instance lvl = inst;
  for (int i = 0; i < j; ++i) lvl.graph.remove_edge(trace.edges[i]);
  lvl.demands[0].s = trace.positions[j];

  std::array<PathSeq, 3> paths;
  auto labels = connected_components(lvl.graph);
  bool one_component = labels[lvl.demands[0].s] == labels[lvl.demands[1].s] &&
                       labels[lvl.demands[1].s] == labels[lvl.demands[2].s] &&
                       labels[lvl.demands[0].s] == labels[lvl.demands[0].t] &&
                       labels[lvl.demands[1].s] == labels[lvl.demands[1].t] &&
                       labels[lvl.demands[2].s] == labels[lvl.demands[2].t];
  if (one_component) {
    // The critical instance proper; terminal-free components drop out here.
    std::vector<char> keep(lvl.graph.node_count(), 0);
    for (NodeId v = 0; v < lvl.graph.node_count(); ++v)
      keep[v] = labels[v] == labels[lvl.demands[0].s];
    SubInstance csub = extract_subgraph(lvl.graph, keep, lvl.demands);
    if (stats) stats->reached_critical_cut = true;
    CriticalCut cut = find_critical_cut(csub.inst, stats);
    Solution csol = solve_critical(csub.inst, cut, stats);
    for (int i = 0; i < 3; ++i) paths[i] = translate_path(csub, csol.paths[i]);
  } else {
    // Level j split into simpler pieces.
    auto got = solve_by_components(lvl.graph, lvl.demands);
    for (int i = 0; i < 3; ++i) paths[i] = std::move(got[i]);
  }

  // Prepend the traversed prefix e_1..e_j to pair 1's path.
  if (paths[0].front() != trace.positions[j]) paths[0].reverse();
  assert(paths[0].front() == trace.positions[j]);
  PathSeq prefix;
  prefix.nodes.assign(trace.positions.begin(), trace.positions.begin() + j + 1);
  prefix.edges.assign(trace.edges.begin(), trace.edges.begin() + j);
  paths[0] = concat_walks(prefix, paths[0]);
  return paths;
}

}  // namespace

SolveOutcome solve(const Instance& input, SolveStats* stats) {
  if (input.demands.size() != 3)
    throw std::invalid_argument("solve: exactly three demand pairs required");
  if (auto odd = first_odd_node(input))
    throw std::invalid_argument("solve: instance is not Eulerian (odd node " +
                                std::to_string(*odd) + ")");
  Instance inst = input;
  for (int i = 0; i < 3; ++i) inst.demands[i].original_index = i + 1;

  std::array<PathSeq, 3> out;
  std::vector<DemandPair> live;
  for (int i = 0; i < 3; ++i) {
    if (inst.demands[i].s == inst.demands[i].t)
      out[i] = empty_path(inst.demands[i].s);
    else
      live.push_back(inst.demands[i]);
  }

  auto labels = connected_components(inst.graph);
  for (const DemandPair& d : live) {
    if (labels[d.s] != labels[d.t]) {
      std::vector<NodeId> comp;
      for (NodeId v = 0; v < inst.graph.node_count(); ++v)
        if (labels[v] == labels[d.s]) comp.push_back(v);
      return make_witness(inst, std::move(comp));
    }
  }

  bool together = live.size() == 3 && labels[live[0].s] == labels[live[1].s] &&
                  labels[live[1].s] == labels[live[2].s];
  if (together) {
    std::vector<char> keep(inst.graph.node_count(), 0);
    for (NodeId v = 0; v < inst.graph.node_count(); ++v)
      keep[v] = labels[v] == labels[live[0].s];
    SubInstance sub = extract_subgraph(inst.graph, keep, live);
    auto res = three_pair_pipeline(sub.inst, stats);
    if (std::holds_alternative<Witness>(res)) {
      const Witness& w = std::get<Witness>(res);
      return make_witness(inst, translate_nodes(sub, w.cut_set));
    }
    auto& paths = std::get<std::array<PathSeq, 3>>(res);
    for (int i = 0; i < 3; ++i)
      out[sub.inst.demands[i].original_index - 1] = translate_path(sub, paths[i]);
  } else {
    auto got = solve_by_components(inst.graph, live);
    for (size_t i = 0; i < live.size(); ++i)
      out[live[i].original_index - 1] = std::move(got[i]);
  }

  Solution sol{std::move(out)};
  if (!verify_solution(inst, sol))
    throw std::logic_error("solve: produced solution failed verification");
  return sol;
}

SolveOutcome solve_quadratic(const Instance& input) {
  if (input.demands.size() != 3)
    throw std::invalid_argument("solve_quadratic: exactly three demand pairs required");
  if (!is_eulerian(input))
    throw std::invalid_argument("solve_quadratic: instance is not Eulerian");
  CheckResult chk = check_feasible(input);
  if (!chk.feasible()) return *chk.witness;

  Instance work = input;
  for (int i = 0; i < 3; ++i) work.demands[i].original_index = i + 1;
  std::array<PathSeq, 3> out;

  PathSeq walk1;
  if (work.demands[0].s != work.demands[0].t) {
    walk1.nodes.push_back(work.demands[0].s);
    std::vector<char> known_infeasible(work.graph.edge_slots(), 0);
    while (work.demands[0].s != work.demands[0].t) {
      NodeId cur = work.demands[0].s;
      EdgeId taken = -1;
      // Snapshot: the incidence list is stable, moves only tombstone.
      const auto inc = work.graph.incident(cur);
      for (const auto& entry : inc) {
        if (!work.graph.edge_alive(entry.edge) || known_infeasible[entry.edge])
          continue;
        work.graph.remove_edge(entry.edge);
        work.demands[0].s = entry.other;
        if (check_feasible(work).feasible()) {
          taken = entry.edge;
          break;
        }
        work.graph.restore_edge(entry.edge);
        work.demands[0].s = cur;
        known_infeasible[entry.edge] = 1;  // edges only disappear, so this stays true
      }
      if (taken < 0)
        throw std::logic_error("solve_quadratic: no feasible local move exists");
      walk1.edges.push_back(taken);
      walk1.nodes.push_back(work.demands[0].s);
    }
    out[0] = std::move(walk1);
  } else {
    out[0] = empty_path(work.demands[0].s);
  }

  auto tail = solve_by_components(work.graph, {work.demands[1], work.demands[2]});
  out[1] = std::move(tail[0]);
  out[2] = std::move(tail[1]);

  Solution sol{std::move(out)};
  if (!verify_solution(input, sol))
    throw std::logic_error("solve_quadratic: produced solution failed verification");
  return sol;
}

}  // namespace edp3
