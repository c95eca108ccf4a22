#include "edp3/instance.hpp"

#include <algorithm>

namespace edp3 {

void PathSeq::reverse() {
  std::reverse(nodes.begin(), nodes.end());
  std::reverse(edges.begin(), edges.end());
}

PathSeq empty_path(NodeId at) {
  PathSeq p;
  p.nodes.push_back(at);
  return p;
}

bool path_valid_in(const MultiGraph& g, const PathSeq& p) {
  if (p.nodes.size() != p.edges.size() + 1) return false;
  for (NodeId v : p.nodes)
    if (!g.valid_node(v)) return false;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    EdgeId e = p.edges[i];
    if (!g.edge_alive(e)) return false;
    NodeId a = p.nodes[i], b = p.nodes[i + 1];
    if (!((g.edge_u(e) == a && g.edge_v(e) == b) ||
          (g.edge_u(e) == b && g.edge_v(e) == a)))
      return false;
  }
  return true;
}

int demand_cut_count(const Instance& inst, const std::vector<char>& in_u) {
  int crossing = 0;
  for (const DemandPair& d : inst.demands) {
    if (d.s == d.t) continue;
    if ((in_u[d.s] != 0) != (in_u[d.t] != 0)) ++crossing;
  }
  return crossing;
}

Witness make_witness(const Instance& inst, std::vector<NodeId> cut_set) {
  std::sort(cut_set.begin(), cut_set.end());
  cut_set.erase(std::unique(cut_set.begin(), cut_set.end()), cut_set.end());
  std::vector<char> in_u(inst.graph.node_count(), 0);
  for (NodeId v : cut_set) in_u[v] = 1;
  Witness w;
  w.cut_capacity = static_cast<int>(cut_edges_masked(inst.graph, in_u).size());
  w.demand_crossing = demand_cut_count(inst, in_u);
  w.cut_set = std::move(cut_set);
  return w;
}

bool witness_valid(const Instance& inst, const Witness& w) {
  Witness fresh = make_witness(inst, w.cut_set);
  return fresh.cut_capacity == w.cut_capacity &&
         fresh.demand_crossing == w.demand_crossing &&
         w.cut_capacity < w.demand_crossing;
}

static std::vector<int> gh_degree_parity(const Instance& inst) {
  std::vector<int> parity(inst.graph.node_count(), 0);
  for (NodeId v = 0; v < inst.graph.node_count(); ++v)
    parity[v] = inst.graph.degree(v) & 1;
  for (const DemandPair& d : inst.demands) {
    if (d.s == d.t) continue;
    parity[d.s] ^= 1;
    parity[d.t] ^= 1;
  }
  return parity;
}

bool is_eulerian(const Instance& inst) { return !first_odd_node(inst); }

std::optional<NodeId> first_odd_node(const Instance& inst) {
  std::vector<int> parity = gh_degree_parity(inst);
  for (NodeId v = 0; v < inst.graph.node_count(); ++v)
    if (parity[v]) return v;
  return std::nullopt;
}

bool verify_solution(const Instance& inst, const Solution& sol) {
  if (inst.demands.size() != 3) return false;
  std::vector<char> used(inst.graph.edge_slots(), 0);
  for (int i = 0; i < 3; ++i) {
    const PathSeq& p = sol.paths[i];
    const DemandPair& d = inst.demands[i];
    if (!path_valid_in(inst.graph, p)) return false;
    bool forward = p.front() == d.s && p.back() == d.t;
    bool backward = p.front() == d.t && p.back() == d.s;
    if (!forward && !backward) return false;
    for (EdgeId e : p.edges) {
      if (used[e]) return false;
      used[e] = 1;
    }
  }
  return true;
}

}  // namespace edp3
