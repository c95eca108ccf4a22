#ifndef EDP3_INSTANCE_HPP
#define EDP3_INSTANCE_HPP

#include <array>
#include <optional>
#include <vector>

#include "edp3/multigraph.hpp"

namespace edp3 {

// One terminal pair. s and t may coincide; such a pair is satisfied by the
// empty path and contributes nothing to the parity condition.
struct DemandPair {
  NodeId s = 0;
  NodeId t = 0;
  int original_index = 0;  // 1..3
};

struct Instance {
  MultiGraph graph;
  std::vector<DemandPair> demands;  // up to 3
};

// Walk in the graph: nodes.size() == edges.size() + 1. An empty walk is a
// single node (no edges) and is only valid when both endpoints coincide.
struct PathSeq {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;

  bool empty() const { return edges.empty(); }
  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }
  void reverse();
};

PathSeq empty_path(NodeId at);

// True iff the sequences are mutually consistent and every edge is live in g.
bool path_valid_in(const MultiGraph& g, const PathSeq& p);

struct Solution {
  std::array<PathSeq, 3> paths;
};

// Node set violating the cut condition: cut_capacity < demand_crossing.
struct Witness {
  std::vector<NodeId> cut_set;  // sorted ascending
  int cut_capacity = 0;         // edges of G crossing
  int demand_crossing = 0;      // demand pairs crossing
};

// d_H(U): demand pairs with exactly one endpoint in U.
int demand_cut_count(const Instance& inst, const std::vector<char>& in_u);

// Builds a Witness from a node set, computing both cut sizes on inst.
Witness make_witness(const Instance& inst, std::vector<NodeId> cut_set);

bool witness_valid(const Instance& inst, const Witness& w);

// Every node even in G + H, where a demand pair with s == t contributes 0
// and a pair with s != t contributes 1 to each endpoint.
bool is_eulerian(const Instance& inst);

// Smallest node id with odd G+H degree, or nullopt when Eulerian.
std::optional<NodeId> first_odd_node(const Instance& inst);

// Each path is a valid walk connecting its demand pair (in either direction)
// and no edge id is used twice across the whole collection.
bool verify_solution(const Instance& inst, const Solution& sol);

}  // namespace edp3

#endif  // EDP3_INSTANCE_HPP
