#include "netdyn/windowing.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "netdyn/error.hpp"

namespace netdyn {

void WindowSpec::validate() const {
  if (window_days < 1) throw SpecError("window length must be at least 1 day");
  if (step_days < 1) throw SpecError("window step must be at least 1 day");
  if (step_days > window_days) {
    throw SpecError("window step (" + std::to_string(step_days) +
                    " days) exceeds window length (" +
                    std::to_string(window_days) + " days)");
  }
  if (origin && *origin < 0) throw SpecError("window origin must be >= 0");
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a / b - ((a % b != 0) && ((a < 0) != (b < 0)));
}

}  // namespace

SliceResult slice_windows(std::vector<EventRecord> events, const WindowSpec& spec) {
  spec.validate();
  if (events.empty()) throw Error("event log is empty");
  if (!std::ranges::is_sorted(events, {}, &EventRecord::timestamp)) {
    std::ranges::stable_sort(events, {}, &EventRecord::timestamp);
  }

  SliceResult result;
  const auto storage = std::make_shared<const std::vector<EventRecord>>(std::move(events));
  result.events = storage;
  const auto& all = *storage;

  const std::int64_t first = all.front().timestamp;
  const std::int64_t last = all.back().timestamp;
  result.origin = spec.origin.value_or(floor_div(first, kSecondsPerDay) * kSecondsPerDay);

  const auto by_time = [](const EventRecord& e) { return e.timestamp; };
  const auto covered_begin =
      std::ranges::lower_bound(all, result.origin, {}, by_time) - all.begin();
  result.dropped_before_origin = static_cast<std::size_t>(covered_begin);

  if (last >= result.origin) {
    // Day containing the last event closes the covered span.
    result.span_days = floor_div(last - result.origin, kSecondsPerDay) + 1;
  }

  const std::int64_t length = std::int64_t{spec.window_days} * kSecondsPerDay;
  const std::int64_t step = std::int64_t{spec.step_days} * kSecondsPerDay;
  std::int64_t window_count = 0;
  if (result.span_days >= spec.window_days) {
    window_count = (result.span_days - spec.window_days) / spec.step_days + 1;
  }

  const std::span<const EventRecord> view(all);
  result.windows.reserve(static_cast<std::size_t>(window_count));
  for (std::int64_t k = 0; k < window_count; ++k) {
    Window w;
    w.index = static_cast<std::size_t>(k + 1);
    w.start = result.origin + k * step;
    w.end = w.start + length;
    const auto lo = std::ranges::lower_bound(all, w.start, {}, by_time) - all.begin();
    const auto hi = std::ranges::lower_bound(all, w.end, {}, by_time) - all.begin();
    w.events = view.subspan(static_cast<std::size_t>(lo),
                            static_cast<std::size_t>(hi - lo));
    result.windows.push_back(w);
  }

  const std::int64_t covered_end =
      result.windows.empty() ? result.origin : result.windows.back().end;
  const auto tail_begin = std::max<std::ptrdiff_t>(
      covered_begin, std::ranges::lower_bound(all, covered_end, {}, by_time) - all.begin());
  result.dropped_trailing = all.size() - static_cast<std::size_t>(tail_begin);
  return result;
}

GraphSnapshot build_snapshot(const Window& window) {
  struct PairHash {
    std::size_t operator()(const std::pair<std::string, std::string>& p) const {
      const std::size_t h = std::hash<std::string>{}(p.first);
      return h ^ (std::hash<std::string>{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
  };
  std::unordered_map<std::pair<std::string, std::string>, std::size_t, PairHash> pair_counts;
  std::unordered_map<std::string, std::size_t> sent;
  std::unordered_map<std::string, NodeId> nodes;

  for (const auto& e : window.events) {
    if (e.sender == e.recipient) {
      throw GraphError("self-loop event from " + e.sender.str());
    }
    ++pair_counts[{e.sender.str(), e.recipient.str()}];
    ++sent[e.sender.str()];
    nodes.try_emplace(e.sender.str(), e.sender);
    nodes.try_emplace(e.recipient.str(), e.recipient);
  }

  std::vector<NodeId> node_list;
  node_list.reserve(nodes.size());
  for (auto& [label, id] : nodes) node_list.push_back(std::move(id));

  std::vector<Edge> edges;
  edges.reserve(pair_counts.size());
  for (const auto& [key, count] : pair_counts) {
    const double w = static_cast<double>(count) / static_cast<double>(sent.at(key.first));
    edges.push_back({NodeId(key.first), NodeId(key.second), w});
  }
  return GraphSnapshot(std::move(node_list), std::move(edges));
}

std::vector<GraphSnapshot> build_snapshots(const SliceResult& slices) {
  std::vector<GraphSnapshot> snapshots;
  snapshots.reserve(slices.windows.size());
  for (const auto& w : slices.windows) snapshots.push_back(build_snapshot(w));
  return snapshots;
}

}  // namespace netdyn
