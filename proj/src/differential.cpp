#include "netdyn/differential.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <set>
#include <tuple>

#include "netdyn/error.hpp"

namespace netdyn {

namespace {

std::strong_ordering compare_keys(const Edge& a, const Edge& b) {
  return std::tie(a.from, a.to) <=> std::tie(b.from, b.to);
}

}  // namespace

GraphDifferentialTuple diff(const GraphSnapshot& before,
                            const GraphSnapshot& after) {
  GraphDifferentialTuple t;
  t.source = before.size();
  t.target = after.size();

  const auto n1 = before.nodes();
  const auto n2 = after.nodes();
  std::ranges::set_difference(n2, n1, std::back_inserter(t.added_nodes));
  std::ranges::set_difference(n1, n2, std::back_inserter(t.removed_nodes));

  // Both edge lists are sorted by (from, to): one merge pass classifies
  // every edge.
  const auto e1 = before.edges();
  const auto e2 = after.edges();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < e1.size() || j < e2.size()) {
    if (j == e2.size() || (i < e1.size() && compare_keys(e1[i], e2[j]) < 0)) {
      t.removed_edges.push_back(e1[i].key());
      ++i;
    } else if (i == e1.size() || compare_keys(e2[j], e1[i]) < 0) {
      t.added_edges.push_back(e2[j]);
      ++j;
    } else {
      ++t.common_edge_count;
      const double delta = e2[j].weight - e1[i].weight;
      if (std::fabs(delta) > kWeightEpsilon) {
        t.modified_weights.push_back({e1[i].from, e1[i].to, delta});
      }
      ++i;
      ++j;
    }
  }
  return t;
}

GraphSnapshot apply(const GraphSnapshot& base,
                    const GraphDifferentialTuple& tuple) {
  if (base.size() != tuple.source) {
    throw InconsistentTupleError("snapshot size does not match tuple source");
  }

  std::set<NodeId> nodes(base.nodes().begin(), base.nodes().end());
  for (const auto& n : tuple.removed_nodes) {
    if (nodes.erase(n) == 0) {
      throw InconsistentTupleError("removed node " + n.str() + " is absent");
    }
  }
  for (const auto& n : tuple.added_nodes) {
    if (!nodes.insert(n).second) {
      throw InconsistentTupleError("added node " + n.str() + " already present");
    }
  }

  std::map<EdgeKey, double> edges;
  for (const auto& e : base.edges()) edges.emplace(e.key(), e.weight);
  for (const auto& key : tuple.removed_edges) {
    if (edges.erase(key) == 0) {
      throw InconsistentTupleError("removed edge " + key.from.str() + "->" +
                                   key.to.str() + " is absent");
    }
  }
  for (const auto& m : tuple.modified_weights) {
    auto it = edges.find(m.key());
    if (it == edges.end()) {
      throw InconsistentTupleError("modified edge " + m.from.str() + "->" +
                                   m.to.str() + " is absent");
    }
    it->second = std::clamp(it->second + m.delta, 0.0, 1.0);
  }
  for (const auto& e : tuple.added_edges) {
    if (!edges.emplace(e.key(), e.weight).second) {
      throw InconsistentTupleError("added edge " + e.from.str() + "->" +
                                   e.to.str() + " already present");
    }
  }

  std::vector<Edge> edge_list;
  edge_list.reserve(edges.size());
  for (auto& [key, w] : edges) edge_list.push_back({key.from, key.to, w});
  try {
    GraphSnapshot result({nodes.begin(), nodes.end()}, std::move(edge_list));
    if (result.size() != tuple.target) {
      throw InconsistentTupleError("result size does not match tuple target");
    }
    return result;
  } catch (const GraphError& e) {
    throw InconsistentTupleError(std::string("tuple yields an invalid graph: ") +
                                 e.what());
  }
}

}  // namespace netdyn
