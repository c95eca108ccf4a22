#include "edp3/dyn_reach.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace edp3 {

DynReach::DynReach(MultiGraph graph, NodeId source, NodeId sink, int bound)
    : g_(std::move(graph)),
      s_(source),
      t_(sink),
      r_(bound),
      flow_(source, sink, 2 * g_.edge_slots()),
      covered_(g_.node_count(), 0),
      parent_arc_(g_.node_count(), -1),
      cursor_(g_.node_count(), 0) {
  if (!g_.valid_node(s_) || !g_.valid_node(t_))
    throw std::invalid_argument("DynReach: invalid terminal");
  if (s_ == t_) throw std::invalid_argument("DynReach: source equals sink");
  if (r_ < 1) throw std::invalid_argument("DynReach: bound must be positive");
  for (const auto& inc : g_.incident(s_))
    if (g_.edge_alive(inc.edge)) live_source_edges_.push_back(inc.edge);
  initial_flow();
  if (!saturated_) {
    restart_from_sink();
    settle();
  }
}

void DynReach::initial_flow() {
  // Plain Ford-Fulkerson rounds, capped at r.
  std::vector<char> visited(g_.node_count());
  std::vector<ArcId> parent(g_.node_count());
  std::vector<int> cursor(g_.node_count());
  for (int round = 0; round < r_; ++round) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(cursor.begin(), cursor.end(), 0);
    std::vector<NodeId> stack{s_};
    visited[s_] = 1;
    bool reached = false;
    while (!stack.empty() && !reached) {
      NodeId v = stack.back();
      const auto& inc = g_.incident(v);
      bool advanced = false;
      while (cursor[v] < static_cast<int>(inc.size())) {
        const auto& entry = inc[cursor[v]++];
        ++scans_;
        if (!g_.edge_alive(entry.edge)) continue;
        ArcId a = arc_from(g_, entry.edge, v);
        if (flow_.contains(a)) continue;
        NodeId h = entry.other;
        if (visited[h]) continue;
        visited[h] = 1;
        parent[h] = a;
        if (h == t_) {
          reached = true;
        } else {
          stack.push_back(h);
        }
        advanced = true;
        break;
      }
      if (!advanced) stack.pop_back();
    }
    if (!reached) return;
    std::vector<ArcId> path;
    for (NodeId v = t_; v != s_; v = arc_tail(g_, parent[v])) path.push_back(parent[v]);
    std::reverse(path.begin(), path.end());
    augment(g_, flow_, path);
  }
  saturated_ = true;
}

void DynReach::restart_from_sink() {
  std::fill(covered_.begin(), covered_.end(), 0);
  std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
  std::fill(cursor_.begin(), cursor_.end(), 0);
  pending_.assign(1, t_);
  covered_[t_] = 1;
}

void DynReach::clear_maintenance() {
  pending_.clear();
  std::fill(covered_.begin(), covered_.end(), 0);
  std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
}

void DynReach::augment_via_tree(ArcId source_arc, NodeId via) {
  std::vector<ArcId> path{source_arc};
  for (NodeId v = via; v != t_; ) {
    ArcId pa = parent_arc_[v];
    assert(pa >= 0);
    path.push_back(pa);
    v = arc_head(g_, pa);
    ++scans_;
  }
  augment(g_, flow_, path);
  if (flow_.value() == r_) saturated_ = true;
}

void DynReach::settle() {
  while (!pending_.empty()) {
    NodeId v = pending_.back();
    const auto& inc = g_.incident(v);
    if (cursor_[v] >= static_cast<int>(inc.size())) {
      pending_.pop_back();
      continue;
    }
    const auto& entry = inc[cursor_[v]++];
    ++scans_;
    if (!g_.edge_alive(entry.edge)) continue;
    NodeId u = entry.other;
    ArcId a = arc_from(g_, entry.edge, u);  // u -> v, entering the covered set
    if (flow_.contains(a)) continue;        // not residual
    if (u == s_) {
      // Breakthrough: the source reaches the sink through the tree.
      augment_via_tree(a, v);
      if (saturated_) {
        clear_maintenance();
        return;
      }
      restart_from_sink();
      continue;
    }
    if (covered_[u]) continue;
    covered_[u] = 1;
    parent_arc_[u] = a;
    pending_.push_back(u);
  }
}

void DynReach::process_new_edge(EdgeId e) {
  for (ArcId a : {forward_arc(e), forward_arc(e) + 1}) {
    if (saturated_) return;
    ++scans_;
    if (flow_.contains(a)) continue;
    NodeId p = arc_tail(g_, a), q = arc_head(g_, a);
    if (!covered_[q]) continue;
    if (p == s_) {
      augment_via_tree(a, q);
      if (saturated_) {
        clear_maintenance();
        return;
      }
      restart_from_sink();
      settle();
      continue;
    }
    if (covered_[p]) continue;
    covered_[p] = 1;
    parent_arc_[p] = a;
    pending_.push_back(p);
  }
}

EdgeId DynReach::live_source_edge_to(NodeId v) const {
  for (EdgeId e : live_source_edges_)
    if (g_.edge_alive(e) && g_.other_end(e, s_) == v) return e;
  return -1;
}

EdgeId DynReach::insert_edge(NodeId u, NodeId v) {
  EdgeId e = g_.add_edge(u, v);
  flow_.ensure_arc_slots(2 * g_.edge_slots());
  if (u == s_ || v == s_) live_source_edges_.push_back(e);
  if (!saturated_) {
    process_new_edge(e);
    settle();
  }
  return e;
}

void DynReach::move(NodeId v, NodeId v_new) {
  if (!g_.valid_node(v) || !g_.valid_node(v_new))
    throw std::invalid_argument("move: invalid node");
  if (v == s_ || v_new == s_)
    throw std::invalid_argument("move: terminal may not be the source");
  if (v == v_new)
    throw std::invalid_argument("move: endpoints coincide (would create a loop)");
  EdgeId sv = live_source_edge_to(v);
  if (sv < 0) throw std::invalid_argument("move: no live source-v edge");

  ArcId out_arc = arc_from(g_, sv, s_);
  assert(!flow_.contains(reverse_arc(out_arc)));  // arcs into the source never join F
  bool in_flow = flow_.contains(out_arc);
  if (in_flow) flow_.erase(out_arc);
  g_.remove_edge(sv);
  live_source_edges_.erase(
      std::find(live_source_edges_.begin(), live_source_edges_.end(), sv));
  // Deleting a source edge never invalidates the tree: the sink is not
  // reachable from the source, so no tree arc touches the source.

  EdgeId e1 = g_.add_edge(s_, v_new);
  EdgeId e2 = g_.add_edge(v_new, v);
  flow_.ensure_arc_slots(2 * g_.edge_slots());
  live_source_edges_.push_back(e1);
  if (in_flow) {
    // Reroute the flow arc through the new midpoint; balance and value are
    // preserved.
    flow_.insert(arc_from(g_, e1, s_));
    flow_.insert(arc_from(g_, e2, v_new));
  }
  if (saturated_) return;
  process_new_edge(e1);
  process_new_edge(e2);
  settle();
}

}  // namespace edp3
