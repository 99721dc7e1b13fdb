#include "netdyn/graph.hpp"

#include <algorithm>
#include <cmath>

#include "netdyn/error.hpp"

namespace netdyn {

bool NodeId::is_valid_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char ch) {
    const auto c = static_cast<unsigned char>(ch);
    return c <= 0x20 || c == 0x7f || c == ',';
  });
}

NodeId::NodeId(std::string label) : label_(std::move(label)) {
  if (!is_valid_label(label_)) {
    throw GraphError("invalid node label '" + label_ + "'");
  }
}

namespace {

bool edge_less(const Edge& a, const Edge& b) {
  return std::tie(a.from, a.to) < std::tie(b.from, b.to);
}

}  // namespace

GraphSnapshot::GraphSnapshot(std::vector<NodeId> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (auto dup = std::adjacent_find(nodes_.begin(), nodes_.end());
      dup != nodes_.end()) {
    throw GraphError("duplicate node " + dup->str());
  }

  std::sort(edges_.begin(), edges_.end(), edge_less);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::string name = e.from.str() + "->" + e.to.str();
    if (e.from == e.to) throw GraphError("self-loop " + name);
    if (!(e.weight >= 0.0 && e.weight <= 1.0)) {
      throw GraphError("weight of " + name + " outside [0, 1]");
    }
    if (!contains(e.from) || !contains(e.to)) {
      throw GraphError("edge " + name + " has an endpoint outside the node set");
    }
    if (i > 0 && edges_[i - 1].from == e.from && edges_[i - 1].to == e.to) {
      throw GraphError("duplicate edge " + name);
    }
  }
}

bool GraphSnapshot::contains(const NodeId& node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

std::optional<double> GraphSnapshot::weight(const NodeId& from,
                                            const NodeId& to) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::tie(from, to),
      [](const Edge& e, const auto& key) { return std::tie(e.from, e.to) < key; });
  if (it == edges_.end() || it->from != from || it->to != to) return std::nullopt;
  return it->weight;
}

bool equivalent(const GraphSnapshot& a, const GraphSnapshot& b, double epsilon) {
  if (!std::ranges::equal(a.nodes(), b.nodes())) return false;
  return std::ranges::equal(a.edges(), b.edges(), [&](const Edge& x, const Edge& y) {
    return x.from == y.from && x.to == y.to &&
           std::fabs(x.weight - y.weight) <= epsilon;
  });
}

}  // namespace netdyn
