#ifndef EDP3_FLOW_HPP
#define EDP3_FLOW_HPP

#include <optional>
#include <span>
#include <vector>

#include "edp3/multigraph.hpp"

namespace edp3 {

// Each live edge e generates two arcs: 2e runs u -> v, 2e+1 runs v -> u.
// An arc and its reverse differ in the low bit.
using ArcId = int;

inline ArcId forward_arc(EdgeId e) { return 2 * e; }
inline ArcId reverse_arc(ArcId a) { return a ^ 1; }
inline EdgeId arc_edge(ArcId a) { return a >> 1; }

inline ArcId arc_from(const MultiGraph& g, EdgeId e, NodeId tail) {
  return g.edge_u(e) == tail ? 2 * e : 2 * e + 1;
}
inline NodeId arc_tail(const MultiGraph& g, ArcId a) {
  return (a & 1) ? g.edge_v(arc_edge(a)) : g.edge_u(arc_edge(a));
}
inline NodeId arc_head(const MultiGraph& g, ArcId a) {
  return (a & 1) ? g.edge_u(arc_edge(a)) : g.edge_v(arc_edge(a));
}

// Arc subset with equal in/out membership at every node except the source
// and sink. Kept reverse-free (an arc and its reverse are never both
// members), so an arc is residual exactly when it is not a member.
class BalancedArcSet {
 public:
  BalancedArcSet(NodeId source, NodeId sink, int arc_slots)
      : source_(source), sink_(sink), member_(arc_slots, 0) {}

  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }
  int value() const { return value_; }

  bool contains(ArcId a) const {
    return a >= 0 && a < static_cast<int>(member_.size()) && member_[a];
  }

  void insert(ArcId a) { member_[a] = 1; }
  void erase(ArcId a) { member_[a] = 0; }
  void add_value(int d) { value_ += d; }

  // Grows the flag array when the underlying graph gained edges.
  void ensure_arc_slots(int arc_slots) {
    if (static_cast<int>(member_.size()) < arc_slots) member_.resize(arc_slots, 0);
  }

  int arc_slots() const { return static_cast<int>(member_.size()); }

 private:
  NodeId source_, sink_;
  int value_ = 0;
  std::vector<char> member_;
};

// Test helpers.
bool balanced_at(const MultiGraph& g, const BalancedArcSet& f, NodeId v);
bool balance_holds(const MultiGraph& g, const BalancedArcSet& f);
bool reverse_free(const MultiGraph& g, const BalancedArcSet& f);

struct Decomposition {
  std::vector<std::vector<ArcId>> st_paths;
  std::vector<std::vector<ArcId>> ts_paths;
  std::vector<std::vector<ArcId>> cycles;
};

// Splits a balanced arc set into node-simple source->sink paths, sink->source
// paths and cycles that together cover every member arc exactly once.
// st_paths.size() - ts_paths.size() == f.value(). O(n + m).
Decomposition decompose(const MultiGraph& g, const BalancedArcSet& f);

// Applies an arc-simple residual source->sink path: arcs whose reverse is a
// member cancel it, the others join. Value grows by one.
void augment(const MultiGraph& g, BalancedArcSet& f, std::span<const ArcId> path);

struct FlowResult {
  BalancedArcSet flow;
  // True when r augmentations succeeded; the flow is then not certified
  // maximum and no cut is available.
  bool saturated = false;
  // Present iff !saturated: nodes reachable from the source in the residual
  // digraph, the inclusion-wise minimal minimum cut. Sorted ascending.
  std::optional<std::vector<NodeId>> min_cut;
};

// Ford-Fulkerson capped at r augmentations, O(r * m).
FlowResult bounded_max_flow(const MultiGraph& g, NodeId s, NodeId t, int r);

// Complement of the set of nodes that can reach the sink in the residual
// digraph: the inclusion-wise maximal minimum cut. Requires an unsaturated
// result (the flow is then certified maximum).
std::vector<NodeId> maximal_min_cut(const MultiGraph& g, const FlowResult& result);

// Node sequence of an arc path starting at `start`.
std::vector<NodeId> arc_path_nodes(const MultiGraph& g, NodeId start,
                                   std::span<const ArcId> arcs);

}  // namespace edp3

#endif  // EDP3_FLOW_HPP
