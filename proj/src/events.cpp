#include "netdyn/events.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "netdyn/error.hpp"

namespace netdyn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Returns an error message, or empty on success.
std::string parse_event(std::string_view line, std::optional<EventRecord>& out) {
  std::string_view fields[3];
  std::size_t count = 0;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    if (count == 3) return "expected 3 comma-separated fields";
    fields[count++] = trim(line.substr(pos, comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (count != 3) return "expected 3 comma-separated fields";
  if (!NodeId::is_valid_label(fields[0])) return "invalid sender";
  if (!NodeId::is_valid_label(fields[1])) return "invalid recipient";

  std::int64_t ts = 0;
  const auto& f = fields[2];
  auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), ts);
  if (ec != std::errc{} || ptr != f.data() + f.size() || f.empty()) {
    return "invalid timestamp '" + std::string(f) + "'";
  }
  if (ts < 0) return "negative timestamp";

  out = EventRecord{NodeId(std::string(fields[0])), NodeId(std::string(fields[1])), ts};
  return {};
}

}  // namespace

EventLog read_event_log(std::istream& in, const ParseOptions& options) {
  EventLog log;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    std::optional<EventRecord> parsed;
    const std::string err = parse_event(body, parsed);
    if (!err.empty()) {
      if (!options.skip_bad_lines) throw ParseError(lineno, err);
      ++log.bad_lines_skipped;
      continue;
    }
    if (parsed->sender == parsed->recipient) {
      ++log.self_loops_dropped;
      continue;
    }
    log.events.push_back(std::move(*parsed));
  }
  std::ranges::stable_sort(log.events, {}, &EventRecord::timestamp);
  return log;
}

void write_event_log(std::ostream& out, std::span<const EventRecord> events) {
  for (const auto& e : events) {
    out << e.sender.str() << ',' << e.recipient.str() << ',' << e.timestamp << '\n';
  }
}

}  // namespace netdyn
