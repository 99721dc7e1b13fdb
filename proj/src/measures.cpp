#include "netdyn/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "netdyn/error.hpp"

namespace netdyn {

CoefficientVector::CoefficientVector(double alpha_plus, double alpha_minus,
                                     double beta_plus, double beta_minus,
                                     double gamma)
    : values_{alpha_plus, alpha_minus, beta_plus, beta_minus, gamma} {
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw SpecError("coefficient " + std::to_string(v) + " outside [0, 1]");
    }
  }
}

CoefficientVector CoefficientVector::swapped() const {
  return {alpha_minus(), alpha_plus(), beta_minus(), beta_plus(), gamma()};
}

double sum_distance(const GraphDifferentialTuple& t, const CoefficientVector& c) {
  return c.alpha_plus() * static_cast<double>(t.added_nodes.size()) +
         c.alpha_minus() * static_cast<double>(t.removed_nodes.size()) +
         c.beta_plus() * static_cast<double>(t.added_edges.size()) +
         c.beta_minus() * static_cast<double>(t.removed_edges.size()) +
         c.gamma() * static_cast<double>(t.modified_weights.size());
}

double normalized_sum(const GraphDifferentialTuple& t, const CoefficientVector& c) {
  const std::size_t total =
      t.source.nodes + t.target.nodes + t.source.edges + t.target.edges;
  if (total == 0) {
    throw DegenerateInputError("normalized sum is undefined for two empty graphs");
  }
  return sum_distance(t, c) / static_cast<double>(total);
}

double relative_sum(const GraphDifferentialTuple& t, const CoefficientVector& c) {
  const std::size_t total = t.source.nodes + t.source.edges;
  if (total == 0) {
    throw DegenerateInputError("relative sum is undefined for an empty first graph");
  }
  return sum_distance(t, c) / static_cast<double>(total);
}

double edge_modification(const GraphDifferentialTuple& t) {
  if (t.common_edge_count == 0) return 0.0;
  double total = 0.0;
  for (const auto& m : t.modified_weights) total += std::fabs(m.delta);
  return total / static_cast<double>(t.common_edge_count);
}

const std::array<CoefficientVector, kCombinationCount>& table2_combinations() {
  // Rows are (α+, α-, β+, β-, γ).
  static const std::array<CoefficientVector, kCombinationCount> table = {{
      {1, 0, 0, 0, 0},  // 1
      {0, 1, 0, 0, 0},  // 2
      {0, 0, 1, 0, 0},  // 3
      {0, 0, 0, 1, 0},  // 4
      {0, 0, 0, 0, 1},  // 5
      {1, 1, 0, 0, 0},  // 6
      {1, 0, 1, 0, 0},  // 7
      {1, 0, 0, 1, 0},  // 8
      {1, 0, 0, 0, 1},  // 9
      {0, 1, 1, 0, 0},  // 10
      {0, 1, 0, 1, 0},  // 11
      {0, 1, 0, 0, 1},  // 12
      {0, 0, 1, 1, 0},  // 13
      {0, 0, 1, 0, 1},  // 14
      {0, 0, 0, 1, 1},  // 15
      {0, 0, 1, 1, 1},  // 16
      {0, 1, 0, 1, 1},  // 17
      {0, 1, 1, 0, 1},  // 18
      {0, 1, 1, 1, 0},  // 19
      {1, 0, 1, 1, 0},  // 20
      {1, 0, 0, 1, 1},  // 21
      {1, 0, 1, 0, 1},  // 22
      {1, 1, 0, 1, 0},  // 23
      {1, 1, 0, 0, 1},  // 24
      {1, 1, 1, 0, 0},  // 25
      {1, 1, 1, 1, 0},  // 26
      {0, 1, 1, 1, 1},  // 27
      {1, 0, 1, 1, 1},  // 28
      {1, 1, 0, 1, 1},  // 29
      {1, 1, 1, 0, 1},  // 30
      {1, 1, 1, 1, 1},  // 31
  }};
  return table;
}

const CoefficientVector& combination(int index) {
  if (index < 1 || index > static_cast<int>(kCombinationCount)) {
    throw SpecError("combination index " + std::to_string(index) +
                    " outside 1..31");
  }
  return table2_combinations()[static_cast<std::size_t>(index - 1)];
}

MeasurePoint measure_point(const GraphDifferentialTuple& t,
                           const CoefficientVector& c, std::size_t pair_index) {
  return {pair_index, sum_distance(t, c), normalized_sum(t, c),
          relative_sum(t, c), edge_modification(t)};
}

std::vector<GraphDifferentialTuple> consecutive_diffs(
    std::span<const GraphSnapshot> snapshots) {
  std::vector<GraphDifferentialTuple> diffs;
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    diffs.push_back(diff(snapshots[i - 1], snapshots[i]));
  }
  return diffs;
}

MeasureSeries measure_series(std::span<const GraphSnapshot> snapshots,
                             const CoefficientVector& c,
                             std::optional<int> combination_index) {
  if (snapshots.size() < 2) {
    throw Error("a measure series needs at least 2 snapshots, got " +
                std::to_string(snapshots.size()));
  }
  const auto diffs = consecutive_diffs(snapshots);
  return measure_series(std::span<const GraphDifferentialTuple>(diffs), c,
                        combination_index);
}

MeasureSeries measure_series(std::span<const GraphDifferentialTuple> diffs,
                             const CoefficientVector& c,
                             std::optional<int> combination_index) {
  if (diffs.empty()) throw Error("a measure series needs at least 2 snapshots");
  MeasureSeries series;
  series.combination = combination_index;
  series.coefficients = c;
  series.points.reserve(diffs.size());
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    series.points.push_back(measure_point(diffs[i], c, i + 1));
  }
  return series;
}

MeasureSeries normalize_series(const MeasureSeries& series) {
  MeasureSeries out = series;
  out.normalized = true;
  const auto scale = [&](double MeasurePoint::*field) {
    double max = 0.0;
    for (const auto& p : out.points) max = std::max(max, p.*field);
    if (max == 0.0) return;
    for (auto& p : out.points) p.*field /= max;
  };
  scale(&MeasurePoint::sum);
  scale(&MeasurePoint::normalized_sum);
  scale(&MeasurePoint::relative_sum);
  scale(&MeasurePoint::edge_modification);
  return out;
}

}  // namespace netdyn
