#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "netdyn/differential.hpp"
#include "netdyn/graph.hpp"

namespace netdyn {

/// Importance weights of the five tuple components, each in [0, 1].
class CoefficientVector {
 public:
  constexpr CoefficientVector() = default;

  /// Throws SpecError if any component lies outside [0, 1].
  CoefficientVector(double alpha_plus, double alpha_minus, double beta_plus,
                    double beta_minus, double gamma);

  static CoefficientVector ones() { return {1, 1, 1, 1, 1}; }

  double alpha_plus() const noexcept { return values_[0]; }
  double alpha_minus() const noexcept { return values_[1]; }
  double beta_plus() const noexcept { return values_[2]; }
  double beta_minus() const noexcept { return values_[3]; }
  double gamma() const noexcept { return values_[4]; }

  /// Components in (α+, α-, β+, β-, γ) order.
  const std::array<double, 5>& values() const noexcept { return values_; }

  /// The vector with added/removed roles exchanged (α+↔α-, β+↔β-).
  CoefficientVector swapped() const;

  friend bool operator==(const CoefficientVector&,
                         const CoefficientVector&) = default;

 private:
  std::array<double, 5> values_{};
};

/// α+|V+| + α-|V-| + β+|E+| + β-|E-| + γ|EΔ|
double sum_distance(const GraphDifferentialTuple& t, const CoefficientVector& c);

/// sum_distance over |V1| + |V2| + |E1| + |E2|. Throws DegenerateInputError
/// when both graphs are empty.
double normalized_sum(const GraphDifferentialTuple& t,
                      const CoefficientVector& c);

/// sum_distance over |V1| + |E1|. Throws DegenerateInputError when the
/// first graph is empty.
double relative_sum(const GraphDifferentialTuple& t, const CoefficientVector& c);

/// Mean |Δw| over edges present in both graphs; 0 when there are none.
double edge_modification(const GraphDifferentialTuple& t);

inline constexpr std::size_t kCombinationCount = 31;

/// The 31 non-zero binary coefficient vectors in the published combination
/// order: 1-5 singletons, 6-15 pairs, 16-25 triples, 26-30 quadruples,
/// 31 all ones. Combination 7 selects added nodes and edges.
const std::array<CoefficientVector, kCombinationCount>& table2_combinations();

/// 1-based lookup into table2_combinations(). Throws SpecError.
const CoefficientVector& combination(int index);

struct MeasurePoint {
  std::size_t pair_index = 0;  // 1-based: snapshot pair_index+1 vs pair_index
  double sum = 0;
  double normalized_sum = 0;
  double relative_sum = 0;
  double edge_modification = 0;
};

struct MeasureSeries {
  std::optional<int> combination;  // empty for a custom coefficient vector
  CoefficientVector coefficients;
  std::vector<MeasurePoint> points;
  bool normalized = false;
};

MeasurePoint measure_point(const GraphDifferentialTuple& t,
                           const CoefficientVector& c, std::size_t pair_index);

/// Diffs of every consecutive snapshot pair, in pair order.
std::vector<GraphDifferentialTuple> consecutive_diffs(
    std::span<const GraphSnapshot> snapshots);

/// Throws Error with fewer than two snapshots.
MeasureSeries measure_series(std::span<const GraphSnapshot> snapshots,
                             const CoefficientVector& c,
                             std::optional<int> combination_index = {});

/// Same as measure_series, over precomputed consecutive diffs.
MeasureSeries measure_series(std::span<const GraphDifferentialTuple> diffs,
                             const CoefficientVector& c,
                             std::optional<int> combination_index = {});

/// Divides each of the four component series by its own maximum. A series
/// whose maximum is 0 is left as is.
MeasureSeries normalize_series(const MeasureSeries& series);

}  // namespace netdyn
