#include "edp3/flow.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace edp3 {

bool balanced_at(const MultiGraph& g, const BalancedArcSet& f, NodeId v) {
  int in = 0, out = 0;
  for (const auto& inc : g.incident(v)) {
    if (!g.edge_alive(inc.edge)) continue;
    ArcId outgoing = arc_from(g, inc.edge, v);
    if (f.contains(outgoing)) ++out;
    if (f.contains(reverse_arc(outgoing))) ++in;
  }
  return in == out;
}

bool balance_holds(const MultiGraph& g, const BalancedArcSet& f) {
  int out_s = 0, in_s = 0;
  for (const auto& inc : g.incident(f.source())) {
    if (!g.edge_alive(inc.edge)) continue;
    ArcId a = arc_from(g, inc.edge, f.source());
    if (f.contains(a)) ++out_s;
    if (f.contains(reverse_arc(a))) ++in_s;
  }
  if (out_s - in_s != f.value()) return false;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (v == f.source() || v == f.sink()) continue;
    if (!balanced_at(g, f, v)) return false;
  }
  return true;
}

bool reverse_free(const MultiGraph& g, const BalancedArcSet& f) {
  for (EdgeId e = 0; e < g.edge_slots(); ++e)
    if (f.contains(forward_arc(e)) && f.contains(forward_arc(e) + 1)) return false;
  return true;
}

namespace {

// Shared walk machinery for decompose: consumes member arcs starting at
// `start`, stripping every revisited loop into `cycles`; walks that reach
// `stop` (when stop >= 0) are emitted into `paths`.
class Stripper {
 public:
  Stripper(const MultiGraph& g, const BalancedArcSet& f)
      : g_(g), f_(f), cursor_(g.node_count(), 0),
        consumed_(f.arc_slots(), 0),
        pos_(g.node_count(), -1), pos_epoch_(g.node_count(), 0) {}

  void run(NodeId start, NodeId stop, std::vector<std::vector<ArcId>>* paths,
           std::vector<std::vector<ArcId>>* cycles) {
    while (true) {
      ++epoch_;
      path_nodes_.assign(1, start);
      path_arcs_.clear();
      mark(start, 0);
      NodeId cur = start;
      while (true) {
        ArcId a = next_member_arc(cur);
        if (a < 0) {
          // Balance guarantees a walk can only stall back at its start
          // with no arcs pending.
          assert(cur == start && path_arcs_.empty());
          return;
        }
        consumed_[a] = 1;
        NodeId h = arc_head(g_, a);
        path_arcs_.push_back(a);
        if (stop >= 0 && h == stop) {
          paths->push_back(path_arcs_);
          break;
        }
        int at = position(h);
        if (at >= 0) {
          cycles->emplace_back(path_arcs_.begin() + at, path_arcs_.end());
          for (size_t i = at + 1; i < path_nodes_.size(); ++i)
            unmark(path_nodes_[i]);
          path_nodes_.resize(at + 1);
          path_arcs_.resize(at);
          cur = h;
        } else {
          mark(h, static_cast<int>(path_arcs_.size()));
          path_nodes_.push_back(h);
          cur = h;
        }
      }
    }
  }

  bool anything_left(NodeId v) { return peek_member_arc(v) >= 0; }

 private:
  ArcId next_member_arc(NodeId v) {
    ArcId a = peek_member_arc(v);
    if (a >= 0) ++cursor_[v];
    return a;
  }

  ArcId peek_member_arc(NodeId v) {
    auto& inc = g_.incident(v);
    while (cursor_[v] < static_cast<int>(inc.size())) {
      ArcId a = arc_from(g_, inc[cursor_[v]].edge, v);
      if (f_.contains(a) && !consumed_[a]) return a;
      ++cursor_[v];
    }
    return -1;
  }

  void mark(NodeId v, int at) {
    pos_[v] = at;
    pos_epoch_[v] = epoch_;
  }
  void unmark(NodeId v) { pos_epoch_[v] = 0; }
  int position(NodeId v) const { return pos_epoch_[v] == epoch_ ? pos_[v] : -1; }

  const MultiGraph& g_;
  const BalancedArcSet& f_;
  std::vector<int> cursor_;
  std::vector<char> consumed_;
  std::vector<int> pos_, pos_epoch_;
  std::vector<NodeId> path_nodes_;
  std::vector<ArcId> path_arcs_;
  int epoch_ = 0;
};

}  // namespace

Decomposition decompose(const MultiGraph& g, const BalancedArcSet& f) {
  if (!balance_holds(g, f))
    throw std::invalid_argument("decompose: arc set is not balanced");
  Decomposition d;
  Stripper stripper(g, f);
  stripper.run(f.source(), f.sink(), &d.st_paths, &d.cycles);
  stripper.run(f.sink(), f.source(), &d.ts_paths, &d.cycles);
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (stripper.anything_left(v)) stripper.run(v, -1, nullptr, &d.cycles);
  assert(static_cast<int>(d.st_paths.size()) -
             static_cast<int>(d.ts_paths.size()) == f.value());
  return d;
}

void augment(const MultiGraph& g, BalancedArcSet& f, std::span<const ArcId> path) {
  if (path.empty()) throw std::invalid_argument("augment: empty path");
  if (arc_tail(g, path.front()) != f.source() ||
      arc_head(g, path.back()) != f.sink())
    throw std::invalid_argument("augment: path does not run source to sink");
  for (size_t i = 0; i < path.size(); ++i) {
    ArcId a = path[i];
    if (!g.edge_alive(arc_edge(a)))
      throw std::invalid_argument("augment: path uses a deleted edge");
    if (f.contains(a))
      throw std::invalid_argument("augment: path arc is not residual");
    if (i + 1 < path.size() && arc_head(g, a) != arc_tail(g, path[i + 1]))
      throw std::invalid_argument("augment: arcs do not chain");
  }
  std::vector<EdgeId> edges(path.size());
  for (size_t i = 0; i < path.size(); ++i) edges[i] = arc_edge(path[i]);
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("augment: path visits an edge twice");
  for (ArcId a : path) {
    if (f.contains(reverse_arc(a)))
      f.erase(reverse_arc(a));
    else
      f.insert(a);
  }
  f.add_value(1);
}

namespace {

// Residual DFS from s; returns the arc path to t, or nullopt with `reached`
// filled with every node reachable from s.
std::optional<std::vector<ArcId>> residual_path(const MultiGraph& g,
                                                const BalancedArcSet& f,
                                                NodeId s, NodeId t,
                                                std::vector<char>* reached) {
  std::vector<char> visited(g.node_count(), 0);
  std::vector<ArcId> parent(g.node_count(), -1);
  std::vector<int> cursor(g.node_count(), 0);
  std::vector<NodeId> stack{s};
  visited[s] = 1;
  NodeId found = -1;
  while (!stack.empty() && found < 0) {
    NodeId v = stack.back();
    auto& inc = g.incident(v);
    bool advanced = false;
    while (cursor[v] < static_cast<int>(inc.size())) {
      const auto& entry = inc[cursor[v]++];
      if (!g.edge_alive(entry.edge)) continue;
      ArcId a = arc_from(g, entry.edge, v);
      if (f.contains(a)) continue;  // not residual
      NodeId h = entry.other;
      if (visited[h]) continue;
      visited[h] = 1;
      parent[h] = a;
      if (h == t) {
        found = h;
        advanced = true;
        break;
      }
      stack.push_back(h);
      advanced = true;
      break;
    }
    if (!advanced) stack.pop_back();
  }
  if (found < 0) {
    if (reached) *reached = std::move(visited);
    return std::nullopt;
  }
  std::vector<ArcId> path;
  for (NodeId v = t; v != s; v = arc_tail(g, parent[v])) path.push_back(parent[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

FlowResult bounded_max_flow(const MultiGraph& g, NodeId s, NodeId t, int r) {
  if (!g.valid_node(s) || !g.valid_node(t))
    throw std::invalid_argument("bounded_max_flow: invalid terminal");
  if (s == t) throw std::invalid_argument("bounded_max_flow: source equals sink");
  if (r < 1) throw std::invalid_argument("bounded_max_flow: bound must be positive");
  FlowResult result{BalancedArcSet(s, t, 2 * g.edge_slots()), false, std::nullopt};
  for (int round = 0; round < r; ++round) {
    std::vector<char> reached;
    auto path = residual_path(g, result.flow, s, t, &reached);
    if (!path) {
      std::vector<NodeId> cut;
      for (NodeId v = 0; v < g.node_count(); ++v)
        if (reached[v]) cut.push_back(v);
      result.min_cut = std::move(cut);
      return result;
    }
    augment(g, result.flow, *path);
  }
  result.saturated = true;
  return result;
}

std::vector<NodeId> maximal_min_cut(const MultiGraph& g, const FlowResult& result) {
  if (result.saturated)
    throw std::invalid_argument(
        "maximal_min_cut: flow is not certified maximum (bound was reached)");
  const BalancedArcSet& f = result.flow;
  // Nodes that can reach the sink in the residual digraph.
  std::vector<char> reaches(g.node_count(), 0);
  std::vector<NodeId> stack{f.sink()};
  reaches[f.sink()] = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(v)) {
      if (!g.edge_alive(inc.edge)) continue;
      NodeId u = inc.other;
      if (reaches[u]) continue;
      if (f.contains(arc_from(g, inc.edge, u))) continue;  // u->v not residual
      reaches[u] = 1;
      stack.push_back(u);
    }
  }
  if (reaches[f.source()])
    throw std::invalid_argument("maximal_min_cut: flow is not maximum");
  std::vector<NodeId> cut;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (!reaches[v]) cut.push_back(v);
  return cut;
}

std::vector<NodeId> arc_path_nodes(const MultiGraph& g, NodeId start,
                                   std::span<const ArcId> arcs) {
  std::vector<NodeId> nodes{start};
  for (ArcId a : arcs) {
    assert(arc_tail(g, a) == nodes.back());
    nodes.push_back(arc_head(g, a));
  }
  return nodes;
}

}  // namespace edp3
