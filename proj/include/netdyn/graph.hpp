#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netdyn {

/// Weights closer than this are treated as equal.
inline constexpr double kWeightEpsilon = 1e-9;

/// Opaque node label. Non-empty; may not contain whitespace, commas or
/// control characters (both text formats are delimiter separated).
class NodeId {
 public:
  explicit NodeId(std::string label);

  const std::string& str() const noexcept { return label_; }

  friend bool operator==(const NodeId&, const NodeId&) = default;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;

  static bool is_valid_label(std::string_view label) noexcept;

 private:
  std::string label_;
};

/// Ordered (directed) node pair.
struct EdgeKey {
  NodeId from;
  NodeId to;

  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct Edge {
  NodeId from;
  NodeId to;
  double weight;

  EdgeKey key() const { return {from, to}; }
};

struct GraphSize {
  std::size_t nodes = 0;
  std::size_t edges = 0;

  friend bool operator==(const GraphSize&, const GraphSize&) = default;
};

/// Immutable weighted directed graph for one time window.
///
/// Nodes are kept sorted by label and edges sorted by (from, to), which
/// makes iteration order deterministic and lets diffs run as a merge.
class GraphSnapshot {
 public:
  GraphSnapshot() = default;

  /// Throws GraphError on a duplicate node, duplicate edge, self-loop,
  /// weight outside [0, 1] or an edge endpoint missing from `nodes`.
  GraphSnapshot(std::vector<NodeId> nodes, std::vector<Edge> edges);

  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  GraphSize size() const noexcept { return {nodes_.size(), edges_.size()}; }
  bool empty() const noexcept { return nodes_.empty(); }

  bool contains(const NodeId& node) const;
  std::optional<double> weight(const NodeId& from, const NodeId& to) const;

 private:
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
};

/// Same node set, same edge set, and weights within `epsilon`.
bool equivalent(const GraphSnapshot& a, const GraphSnapshot& b,
                double epsilon = kWeightEpsilon);

}  // namespace netdyn
