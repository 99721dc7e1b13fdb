#pragma once

#include <cstddef>
#include <vector>

#include "netdyn/graph.hpp"

namespace netdyn {

/// Signed weight change of an edge present in both snapshots.
struct WeightDelta {
  NodeId from;
  NodeId to;
  double delta;  // w2 - w1

  EdgeKey key() const { return {from, to}; }
};

/// Change set between two snapshots: added/removed nodes, added/removed
/// edges and modified weights, plus the sizes the distance measures need.
///
/// Every list is sorted (nodes by label, edges by (from, to)). Added edges
/// keep their target weight so the tuple can be replayed with apply().
struct GraphDifferentialTuple {
  std::vector<NodeId> added_nodes;
  std::vector<NodeId> removed_nodes;
  std::vector<Edge> added_edges;
  std::vector<EdgeKey> removed_edges;
  std::vector<WeightDelta> modified_weights;
  std::size_t common_edge_count = 0;
  GraphSize source;
  GraphSize target;

  /// True when all five change sets are empty.
  bool no_changes() const noexcept {
    return added_nodes.empty() && removed_nodes.empty() &&
           added_edges.empty() && removed_edges.empty() &&
           modified_weights.empty();
  }
};

GraphDifferentialTuple diff(const GraphSnapshot& before,
                            const GraphSnapshot& after);

/// Replays `tuple` on `base`. Throws InconsistentTupleError if the tuple
/// was not produced against a snapshot equivalent to `base`.
GraphSnapshot apply(const GraphSnapshot& base,
                    const GraphDifferentialTuple& tuple);

}  // namespace netdyn
