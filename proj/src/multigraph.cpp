#include "edp3/multigraph.hpp"

namespace edp3 {

std::vector<EdgeId> cut_edges_masked(const MultiGraph& g, const std::vector<char>& in_u) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge_alive(e)) continue;
    bool a = in_u[g.edge_u(e)] != 0;
    bool b = in_u[g.edge_v(e)] != 0;
    if (a != b) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> cut_edges(const MultiGraph& g, std::span<const NodeId> u_nodes) {
  std::vector<char> in_u(g.node_count(), 0);
  for (NodeId v : u_nodes) {
    if (!g.valid_node(v)) throw std::invalid_argument("invalid node id in cut set");
    in_u[v] = 1;
  }
  return cut_edges_masked(g, in_u);
}

std::vector<int> connected_components(const MultiGraph& g) {
  std::vector<int> label(g.node_count(), -1);
  std::vector<NodeId> stack;
  int next = 0;
  for (NodeId start = 0; start < g.node_count(); ++start) {
    if (label[start] != -1) continue;
    label[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (!g.edge_alive(inc.edge)) continue;
        if (label[inc.other] == -1) {
          label[inc.other] = next;
          stack.push_back(inc.other);
        }
      }
    }
    ++next;
  }
  return label;
}

bool graph_invariants_hold(const MultiGraph& g) {
  long long ends = 0;
  std::vector<int> seen(g.edge_slots(), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    int live = 0;
    for (const auto& inc : g.incident(v)) {
      if (inc.edge < 0 || inc.edge >= g.edge_slots()) return false;
      if (g.other_end(inc.edge, v) != inc.other) return false;
      ++seen[inc.edge];
      if (g.edge_alive(inc.edge)) ++live;
    }
    if (live != g.degree(v)) return false;
    ends += live;
  }
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (seen[e] != 2) return false;
    if (g.edge_u(e) == g.edge_v(e)) return false;
  }
  return ends == 2LL * g.live_edge_count();
}

}  // namespace edp3
