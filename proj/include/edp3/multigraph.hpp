#ifndef EDP3_MULTIGRAPH_HPP
#define EDP3_MULTIGRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace edp3 {

using NodeId = int;
using EdgeId = int;

// Undirected multigraph with dense node ids and stable edge ids.
// Parallel edges are allowed, loops are not. Edge deletion tombstones
// the edge; ids are never reused or renumbered, so paths computed on a
// sub-instance refer to the same ids as the original graph.
class MultiGraph {
 public:
  struct IncEntry {
    EdgeId edge;
    NodeId other;
  };

  MultiGraph() = default;
  explicit MultiGraph(int node_count)
      : inc_(node_count), live_degree_(node_count, 0) {}

  NodeId add_node() {
    inc_.emplace_back();
    live_degree_.push_back(0);
    return static_cast<NodeId>(inc_.size()) - 1;
  }

  EdgeId add_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v) throw std::invalid_argument("loop edges are not allowed");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, true});
    inc_[u].push_back({id, v});
    inc_[v].push_back({id, u});
    ++live_degree_[u];
    ++live_degree_[v];
    ++live_edges_;
    return id;
  }

  void remove_edge(EdgeId e) {
    check_live(e);
    edges_[e].alive = false;
    --live_degree_[edges_[e].u];
    --live_degree_[edges_[e].v];
    --live_edges_;
  }

  // Undoes a remove_edge; the incidence entries were never dropped.
  void restore_edge(EdgeId e) {
    check_edge(e);
    if (edges_[e].alive) throw std::invalid_argument("edge is not deleted");
    edges_[e].alive = true;
    ++live_degree_[edges_[e].u];
    ++live_degree_[edges_[e].v];
    ++live_edges_;
  }

  int node_count() const { return static_cast<int>(inc_.size()); }
  // Total edge ids ever allocated, tombstones included.
  int edge_slots() const { return static_cast<int>(edges_.size()); }
  int live_edge_count() const { return live_edges_; }

  bool valid_node(NodeId v) const { return v >= 0 && v < node_count(); }
  bool edge_alive(EdgeId e) const {
    return e >= 0 && e < edge_slots() && edges_[e].alive;
  }

  NodeId edge_u(EdgeId e) const { check_edge(e); return edges_[e].u; }
  NodeId edge_v(EdgeId e) const { check_edge(e); return edges_[e].v; }

  NodeId other_end(EdgeId e, NodeId v) const {
    check_edge(e);
    if (edges_[e].u == v) return edges_[e].v;
    if (edges_[e].v == v) return edges_[e].u;
    throw std::invalid_argument("node is not an endpoint of the edge");
  }

  bool is_endpoint(EdgeId e, NodeId v) const {
    check_edge(e);
    return edges_[e].u == v || edges_[e].v == v;
  }

  // Live incident edge ends at v.
  int degree(NodeId v) const {
    check_node(v);
    return live_degree_[v];
  }

  // Incidence sequence in insertion order; entries of deleted edges remain
  // and must be skipped via edge_alive.
  const std::vector<IncEntry>& incident(NodeId v) const {
    check_node(v);
    return inc_[v];
  }

 private:
  struct EdgeRec {
    NodeId u, v;
    bool alive;
  };

  void check_node(NodeId v) const {
    if (!valid_node(v)) throw std::invalid_argument("invalid node id");
  }
  void check_edge(EdgeId e) const {
    if (e < 0 || e >= edge_slots()) throw std::invalid_argument("invalid edge id");
  }
  void check_live(EdgeId e) const {
    check_edge(e);
    if (!edges_[e].alive) throw std::invalid_argument("edge is deleted");
  }

  std::vector<EdgeRec> edges_;
  std::vector<std::vector<IncEntry>> inc_;
  std::vector<int> live_degree_;
  int live_edges_ = 0;
};

// Edges with exactly one endpoint in U, ascending by id.
std::vector<EdgeId> cut_edges(const MultiGraph& g, std::span<const NodeId> u_nodes);
std::vector<EdgeId> cut_edges_masked(const MultiGraph& g, const std::vector<char>& in_u);

// Per-node component labels, 0..#components-1, O(n + m).
std::vector<int> connected_components(const MultiGraph& g);

// Internal consistency check used by tests.
bool graph_invariants_hold(const MultiGraph& g);

}  // namespace edp3

#endif  // EDP3_MULTIGRAPH_HPP
