#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "netdyn/events.hpp"

namespace netdyn {

/// Parameters of the bursty log generator. Each node sends at the epochs
/// of a renewal process with Pareto(alpha, min_gap) gaps; recipients are
/// uniform over the other nodes.
struct SynthSpec {
  int node_count = 100;
  int span_days = 615;
  double alpha = 2.0;
  std::int64_t min_gap_seconds = 600;
  std::uint64_t seed = 1;

  /// Throws SpecError; alpha must lie strictly inside (1.5, 2.5).
  void validate() const;
};

/// Deterministic in `spec`; sorted by timestamp, all in [0, span).
std::vector<EventRecord> generate_log(const SynthSpec& spec);

/// Label of the i-th synthetic node (0-based), zero-padded to the width
/// of node_count.
std::string synth_node_label(int index, int node_count);

/// Interevent gaps of every sender, in send order, sender by sender.
std::vector<double> sender_gaps(std::span<const EventRecord> events);

/// Maximum-likelihood exponent of a power-law density truncated to
/// [lower, upper], fitted to the samples falling in that range.
/// Throws Error with fewer than two usable samples.
double fit_truncated_power_law(std::span<const double> samples, double lower,
                               double upper);

}  // namespace netdyn
