#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "netdyn/events.hpp"
#include "netdyn/graph.hpp"

namespace netdyn {

/// Fixed-length windows advancing by `step_days`. step == length gives
/// disjoint windows, step < length overlapping ones.
struct WindowSpec {
  int window_days = 30;
  int step_days = 30;
  /// Start of the first window. Defaults to 00:00:00 UTC of the day of
  /// the earliest event.
  std::optional<std::int64_t> origin;

  /// Throws SpecError unless 1 <= step_days <= window_days.
  void validate() const;
};

/// Half-open interval [start, end) with the events it contains.
struct Window {
  std::size_t index = 0;  // 1-based
  std::int64_t start = 0;
  std::int64_t end = 0;
  std::span<const EventRecord> events;
};

/// Windows produced from one log. The windows view into `events`, which
/// the result owns; copies share the same storage.
struct SliceResult {
  std::shared_ptr<const std::vector<EventRecord>> events;
  std::vector<Window> windows;
  std::int64_t origin = 0;
  std::int64_t span_days = 0;  // whole days from origin to the last event
  std::size_t dropped_before_origin = 0;
  std::size_t dropped_trailing = 0;  // after the last complete window
};

/// Slices a log into every complete window that fits in the covered span.
/// Unsorted input is stably sorted first. Throws SpecError for an invalid
/// spec and Error for an empty log.
SliceResult slice_windows(std::vector<EventRecord> events,
                          const WindowSpec& spec);

/// Edge weight w(x, y) = N(x, y) / N(x), counted within the window.
GraphSnapshot build_snapshot(const Window& window);

std::vector<GraphSnapshot> build_snapshots(const SliceResult& slices);

}  // namespace netdyn
