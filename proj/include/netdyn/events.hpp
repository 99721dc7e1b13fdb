#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "netdyn/graph.hpp"

namespace netdyn {

inline constexpr std::int64_t kSecondsPerDay = 86400;

/// One directed interaction, e.g. an e-mail from sender to recipient.
struct EventRecord {
  NodeId sender;
  NodeId recipient;
  std::int64_t timestamp;  // seconds since the Unix epoch

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

struct ParseOptions {
  /// Count and skip malformed lines instead of aborting.
  bool skip_bad_lines = false;
};

/// Parsed event log, stably sorted by timestamp.
struct EventLog {
  std::vector<EventRecord> events;
  std::size_t self_loops_dropped = 0;
  std::size_t bad_lines_skipped = 0;
};

/// Reads `<sender>,<recipient>,<unix_seconds>` lines. Lines starting with
/// '#' and blank lines are ignored. Self-loops are dropped and counted.
EventLog read_event_log(std::istream& in, const ParseOptions& options = {});

void write_event_log(std::ostream& out, std::span<const EventRecord> events);

}  // namespace netdyn
