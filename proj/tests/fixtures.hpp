#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "netdyn/graph.hpp"

namespace netdyn::testing {

inline GraphSnapshot make_graph(
    const std::vector<std::string>& nodes,
    const std::vector<std::tuple<std::string, std::string, double>>& edges) {
  std::vector<NodeId> ids;
  for (const auto& n : nodes) ids.emplace_back(n);
  std::vector<Edge> list;
  for (const auto& [from, to, w] : edges) list.push_back({NodeId(from), NodeId(to), w});
  return GraphSnapshot(std::move(ids), std::move(list));
}

// Case study: the earlier graph of the worked example.
inline GraphSnapshot case_study_first() {
  return make_graph({"A", "B", "C", "D", "E", "F"},
                    {{"A", "B", 0.3}, {"B", "A", 0.5}, {"B", "C", 0.8},
                     {"C", "D", 1.0}, {"C", "E", 0.7}, {"D", "C", 0.9},
                     {"D", "E", 0.2}, {"E", "D", 0.1}, {"F", "B", 0.6},
                     {"F", "E", 0.4}});
}

// Case study: the later graph.
inline GraphSnapshot case_study_second() {
  return make_graph({"A", "B", "C", "E", "F", "G"},
                    {{"A", "B", 0.3}, {"A", "G", 0.3}, {"B", "A", 0.5},
                     {"B", "C", 0.8}, {"C", "E", 0.3}, {"E", "C", 0.1},
                     {"F", "B", 0.9}, {"G", "A", 0.4}});
}

inline double random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 9);
  switch (kind(rng)) {
    case 0: return 0.0;
    case 1: return 1.0;
    default: return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  }
}

inline std::string pool_label(int i) { return "v" + std::to_string(i); }

/// Random snapshot over labels v0..v(pool-1).
inline GraphSnapshot random_graph(std::mt19937_64& rng, int pool,
                                  double node_p = 0.7, double edge_p = 0.3) {
  std::bernoulli_distribution has_node(node_p), has_edge(edge_p);
  std::vector<std::string> nodes;
  for (int i = 0; i < pool; ++i) {
    if (has_node(rng)) nodes.push_back(pool_label(i));
  }
  std::vector<std::tuple<std::string, std::string, double>> edges;
  for (const auto& a : nodes) {
    for (const auto& b : nodes) {
      if (a != b && has_edge(rng)) edges.emplace_back(a, b, random_weight(rng));
    }
  }
  return make_graph(nodes, edges);
}

/// A successor of `g` with node/edge churn and some re-weighted edges.
inline GraphSnapshot churn(std::mt19937_64& rng, const GraphSnapshot& g, int pool) {
  std::bernoulli_distribution drop_node(0.2), add_node(0.3), keep_edge(0.6),
      reweight(0.5), add_edge(0.2);
  std::vector<std::string> nodes;
  for (int i = 0; i < pool; ++i) {
    const NodeId id(pool_label(i));
    const bool in_g = g.contains(id);
    if ((in_g && !drop_node(rng)) || (!in_g && add_node(rng))) nodes.push_back(id.str());
  }
  std::vector<std::tuple<std::string, std::string, double>> edges;
  for (const auto& a : nodes) {
    for (const auto& b : nodes) {
      if (a == b) continue;
      const auto w = g.weight(NodeId(a), NodeId(b));
      if (w && keep_edge(rng)) {
        edges.emplace_back(a, b, reweight(rng) ? random_weight(rng) : *w);
      } else if (!w && add_edge(rng)) {
        edges.emplace_back(a, b, random_weight(rng));
      }
    }
  }
  return make_graph(nodes, edges);
}

/// Independent re-derivation of the five change sets by enumerating every
/// label and ordered label pair in the pool, with linear membership scans.
struct NaiveDiff {
  std::set<std::string> added_nodes, removed_nodes;
  std::set<std::pair<std::string, std::string>> added_edges, removed_edges;
  std::set<std::pair<std::string, std::string>> modified;
  std::vector<double> deltas;  // in the order of `modified`
  std::size_t common = 0;
};

inline NaiveDiff naive_diff(const GraphSnapshot& g1, const GraphSnapshot& g2, int pool) {
  const auto has_node = [](const GraphSnapshot& g, const std::string& x) {
    for (const auto& n : g.nodes()) {
      if (n.str() == x) return true;
    }
    return false;
  };
  const auto find_edge = [](const GraphSnapshot& g, const std::string& x,
                            const std::string& y) -> const Edge* {
    for (const auto& e : g.edges()) {
      if (e.from.str() == x && e.to.str() == y) return &e;
    }
    return nullptr;
  };

  NaiveDiff d;
  for (int i = 0; i < pool; ++i) {
    const auto x = pool_label(i);
    const bool in1 = has_node(g1, x), in2 = has_node(g2, x);
    if (!in1 && in2) d.added_nodes.insert(x);
    if (in1 && !in2) d.removed_nodes.insert(x);
  }
  std::vector<std::pair<std::pair<std::string, std::string>, double>> mods;
  for (int i = 0; i < pool; ++i) {
    for (int j = 0; j < pool; ++j) {
      const auto x = pool_label(i), y = pool_label(j);
      const Edge* e1 = find_edge(g1, x, y);
      const Edge* e2 = find_edge(g2, x, y);
      if (!e1 && e2) d.added_edges.insert({x, y});
      if (e1 && !e2) d.removed_edges.insert({x, y});
      if (e1 && e2) {
        ++d.common;
        if (std::abs(e2->weight - e1->weight) > 1e-9) {
          mods.push_back({{x, y}, e2->weight - e1->weight});
        }
      }
    }
  }
  std::sort(mods.begin(), mods.end());
  for (const auto& [k, delta] : mods) {
    d.modified.insert(k);
    d.deltas.push_back(delta);
  }
  return d;
}

}  // namespace netdyn::testing
