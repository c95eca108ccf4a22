#ifndef EDP3_DYN_REACH_HPP
#define EDP3_DYN_REACH_HPP

#include "edp3/flow.hpp"
#include "edp3/multigraph.hpp"

namespace edp3 {

// Incremental structure maintaining min(r, max #edge-disjoint source-sink
// paths) in an undirected graph under source-side Move operations and edge
// insertions. Any request sequence costs O(r * m) total.
//
// While unsaturated it maintains a maximum balanced arc set F plus a
// directed tree oriented toward the sink covering exactly the nodes that
// can reach the sink in the residual digraph. The tree grows by a single
// suspendable depth-first traversal between breakthroughs; a breakthrough
// augments F and rebuilds the tree from scratch. Once the value reaches r
// all tree maintenance stops.
class DynReach {
 public:
  DynReach(MultiGraph graph, NodeId source, NodeId sink, int bound);

  // min(r, current max number of edge-disjoint source-sink paths).
  int query() const { return flow_.value(); }

  // Removes edge source-v, inserts edges source-v_new and v_new-v.
  // Requires v != source, v_new != source, v_new != v and a live source-v
  // edge.
  void move(NodeId v, NodeId v_new);

  // Inserts an arbitrary edge; returns its id in the internal graph.
  EdgeId insert_edge(NodeId u, NodeId v);

  const MultiGraph& graph() const { return g_; }
  const BalancedArcSet& flow() const { return flow_; }
  NodeId source() const { return s_; }
  NodeId sink() const { return t_; }
  int bound() const { return r_; }
  bool saturated() const { return saturated_; }

  // Tree coverage (nodes that can reach the sink in the residual digraph).
  // Meaningful only while unsaturated.
  bool tree_covered(NodeId v) const { return covered_[v] != 0; }

  // Incidence entries examined since construction; the complexity contract
  // keeps this within O(r * m).
  long long arc_scans() const { return scans_; }

 private:
  void initial_flow();
  void restart_from_sink();
  void clear_maintenance();
  void settle();
  void process_new_edge(EdgeId e);
  void augment_via_tree(ArcId source_arc, NodeId via);
  EdgeId live_source_edge_to(NodeId v) const;

  MultiGraph g_;
  NodeId s_, t_;
  int r_;
  BalancedArcSet flow_;
  bool saturated_ = false;
  std::vector<char> covered_;
  std::vector<ArcId> parent_arc_;  // residual tree arc v -> parent, toward sink
  std::vector<int> cursor_;        // suspended traversal position per node
  std::vector<NodeId> pending_;    // nodes with unfinished scans
  std::vector<EdgeId> live_source_edges_;  // live edges at the source, O(r) many
  long long scans_ = 0;
};

}  // namespace edp3

#endif  // EDP3_DYN_REACH_HPP
