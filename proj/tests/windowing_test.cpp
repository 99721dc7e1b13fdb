#include <gtest/gtest.h>

#include <map>
#include <random>

#include "netdyn/error.hpp"
#include "netdyn/windowing.hpp"

using namespace netdyn;

namespace {

constexpr std::int64_t kDay = kSecondsPerDay;

EventRecord ev(const std::string& from, const std::string& to, std::int64_t ts) {
  return {NodeId(from), NodeId(to), ts};
}

// Events spread over [base, base + days) with one on the first and last day.
std::vector<EventRecord> log_spanning(int days, std::int64_t base = 0, int per_day = 3) {
  std::vector<EventRecord> events;
  for (int d = 0; d < days; ++d) {
    for (int k = 0; k < per_day; ++k) {
      events.push_back(ev("u" + std::to_string(k), "u" + std::to_string(k + 1),
                          base + d * kDay + k * 3600 + 17));
    }
  }
  return events;
}

std::map<std::int64_t, int> membership(const SliceResult& r) {
  std::map<std::int64_t, int> seen;
  for (const auto& w : r.windows) {
    for (const auto& e : w.events) ++seen[e.timestamp];
  }
  return seen;
}

}  // namespace

TEST(SliceTest, WindowCounts) {
  EXPECT_EQ(slice_windows(log_spanning(615), {30, 15, {}}).windows.size(), 40u);
  EXPECT_EQ(slice_windows(log_spanning(600), {30, 30, {}}).windows.size(), 20u);
  EXPECT_EQ(slice_windows(log_spanning(29), {30, 30, {}}).windows.size(), 0u);
}

TEST(SliceTest, SingleWindowHoldsEverything) {
  const auto events = log_spanning(30);
  const auto r = slice_windows(events, {30, 30, {}});
  ASSERT_EQ(r.windows.size(), 1u);
  EXPECT_EQ(r.windows[0].events.size(), events.size());
  EXPECT_EQ(r.dropped_trailing, 0u);
}

TEST(SliceTest, WindowGeometry) {
  const std::int64_t base = 1'140'000'000 + 5000;  // mid-day
  const auto r = slice_windows(log_spanning(100, base), {30, 15, {}});
  const std::int64_t origin = base - base % kDay;
  EXPECT_EQ(r.origin, origin);
  for (const auto& w : r.windows) {
    EXPECT_EQ(w.start, origin + static_cast<std::int64_t>(w.index - 1) * 15 * kDay);
    EXPECT_EQ(w.end, w.start + 30 * kDay);
    for (const auto& e : w.events) {
      EXPECT_GE(e.timestamp, w.start);
      EXPECT_LT(e.timestamp, w.end);
    }
  }
}

TEST(SliceTest, InvalidInput) {
  EXPECT_THROW(slice_windows({}, {30, 30, {}}), Error);
  EXPECT_THROW(slice_windows(log_spanning(60), {30, 31, {}}), SpecError);
  EXPECT_THROW(slice_windows(log_spanning(60), {0, 0, {}}), SpecError);
  EXPECT_THROW(slice_windows(log_spanning(60), {30, 0, {}}), SpecError);
  EXPECT_THROW(slice_windows(log_spanning(60), {30, -1, {}}), SpecError);
}

TEST(SliceTest, UnsortedInputIsSorted) {
  auto events = log_spanning(60);
  std::reverse(events.begin(), events.end());
  const auto r = slice_windows(events, {30, 30, {}});
  ASSERT_EQ(r.windows.size(), 2u);
  EXPECT_EQ(r.windows[0].events.size() + r.windows[1].events.size(), events.size());
}

TEST(SliceTest, HalfOpenBoundary) {
  std::vector<EventRecord> events = {ev("a", "b", 0), ev("a", "b", 30 * kDay),
                                     ev("b", "a", 60 * kDay - 1)};
  const auto r = slice_windows(events, {30, 30, {}});
  ASSERT_EQ(r.windows.size(), 2u);
  ASSERT_EQ(r.windows[0].events.size(), 1u);
  ASSERT_EQ(r.windows[1].events.size(), 2u);
  EXPECT_EQ(r.windows[1].events[0].timestamp, 30 * kDay);
}

TEST(SliceTest, NonOverlappingCoversEachEventOnce) {
  const auto events = log_spanning(95);
  const auto r = slice_windows(events, {30, 30, {}});
  ASSERT_EQ(r.windows.size(), 3u);
  std::size_t total = 0;
  for (const auto& w : r.windows) total += w.events.size();
  EXPECT_EQ(total + r.dropped_trailing, events.size());
  EXPECT_EQ(r.dropped_trailing, 5u * 3u);
  for (const auto& [ts, count] : membership(r)) EXPECT_EQ(count, 1) << ts;
}

TEST(SliceTest, HalfStepOverlapCoversInteriorTwice) {
  const auto r = slice_windows(log_spanning(615), {30, 15, {}});
  const std::int64_t last_end = r.windows.back().end;
  const auto seen = membership(r);
  for (const auto& e : *r.events) {
    const bool interior = e.timestamp >= r.origin + 15 * kDay &&
                          e.timestamp < last_end - 15 * kDay;
    if (interior) {
      EXPECT_EQ(seen.at(e.timestamp), 2) << e.timestamp;
    }
  }
}

TEST(SliceTest, OriginOverride) {
  const auto events = log_spanning(70);
  const auto r = slice_windows(events, {30, 30, 5 * kDay});
  EXPECT_EQ(r.origin, 5 * kDay);
  EXPECT_EQ(r.dropped_before_origin, 5u * 3u);
  EXPECT_EQ(r.span_days, 65);
  ASSERT_EQ(r.windows.size(), 2u);
  EXPECT_EQ(r.dropped_trailing, 5u * 3u);
}

TEST(SliceTest, CopiesShareStorage) {
  SliceResult copy;
  {
    const auto r = slice_windows(log_spanning(60), {30, 30, {}});
    copy = r;
  }
  ASSERT_EQ(copy.windows.size(), 2u);
  EXPECT_EQ(copy.windows[1].events.front().sender.str(), "u0");
}

TEST(BuildSnapshotTest, WeightsAreSenderShares) {
  std::vector<EventRecord> events = {ev("x", "y", 1), ev("x", "y", 2), ev("x", "z", 3),
                                     ev("x", "y", 4)};
  const Window w{1, 0, kDay, events};
  const auto g = build_snapshot(w);
  EXPECT_EQ(g.size(), (GraphSize{3, 2}));
  EXPECT_DOUBLE_EQ(*g.weight(NodeId("x"), NodeId("y")), 0.75);
  EXPECT_DOUBLE_EQ(*g.weight(NodeId("x"), NodeId("z")), 0.25);
  // y and z only receive.
  for (const auto& e : g.edges()) EXPECT_EQ(e.from.str(), "x");
}

TEST(BuildSnapshotTest, SingleEventAndEmptyWindow) {
  std::vector<EventRecord> one = {ev("x", "y", 1)};
  const auto g = build_snapshot(Window{1, 0, kDay, one});
  EXPECT_DOUBLE_EQ(*g.weight(NodeId("x"), NodeId("y")), 1.0);
  EXPECT_TRUE(build_snapshot(Window{1, 0, kDay, {}}).empty());
}

TEST(BuildSnapshotTest, MatchesTallyOracle) {
  std::mt19937_64 rng(50);
  std::uniform_int_distribution<int> pick(0, 49);
  std::vector<EventRecord> events;
  while (events.size() < 2000) {
    const int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    events.push_back(ev("p" + std::to_string(a), "p" + std::to_string(b),
                        static_cast<std::int64_t>(events.size())));
  }

  std::map<std::pair<std::string, std::string>, int> pair_count;
  std::map<std::string, int> out_count;
  for (const auto& e : events) {
    ++pair_count[{e.sender.str(), e.recipient.str()}];
    ++out_count[e.sender.str()];
  }

  const auto g = build_snapshot(Window{1, 0, kDay, events});
  ASSERT_EQ(g.edges().size(), pair_count.size());
  for (const auto& [key, n] : pair_count) {
    const auto w = g.weight(NodeId(key.first), NodeId(key.second));
    ASSERT_TRUE(w.has_value());
    EXPECT_DOUBLE_EQ(*w, static_cast<double>(n) / out_count[key.first]);
  }

  std::map<std::string, double> row_sum;
  for (const auto& e : g.edges()) {
    EXPECT_GT(e.weight, 0.0);
    EXPECT_LE(e.weight, 1.0);
    row_sum[e.from.str()] += e.weight;
  }
  for (const auto& [node, s] : row_sum) EXPECT_NEAR(s, 1.0, 1e-9) << node;
}

TEST(BuildSnapshotTest, RejectsSelfLoopEvents) {
  std::vector<EventRecord> events = {ev("x", "x", 1)};
  EXPECT_THROW(build_snapshot(Window{1, 0, kDay, events}), GraphError);
}
