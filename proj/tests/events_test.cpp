#include <gtest/gtest.h>

#include <sstream>

#include "netdyn/error.hpp"
#include "netdyn/events.hpp"

using namespace netdyn;

TEST(EventLogTest, ParsesAndSorts) {
  std::istringstream in(
      "# header comment\n"
      "a,b,200\n"
      "\n"
      "b,c,100\n"
      " c , a , 200 \n");
  const auto log = read_event_log(in);
  ASSERT_EQ(log.events.size(), 3u);
  EXPECT_EQ(log.events[0].timestamp, 100);
  EXPECT_EQ(log.events[1].sender.str(), "a");  // stable among ties
  EXPECT_EQ(log.events[2].sender.str(), "c");
  EXPECT_EQ(log.events[2].recipient.str(), "a");
}

TEST(EventLogTest, DropsAndCountsSelfLoops) {
  std::istringstream in("a,a,1\na,b,2\nb,b,3\n");
  const auto log = read_event_log(in);
  EXPECT_EQ(log.events.size(), 1u);
  EXPECT_EQ(log.self_loops_dropped, 2u);
}

TEST(EventLogTest, MalformedLineAbortsWithLineNumber) {
  for (const std::string bad : {"a,b", "a,b,c", "a,b,1,2", ",b,1", "a,b,-5", "a,b,1.5", "a b,c,1"}) {
    std::istringstream in("x,y,1\n" + bad + "\n");
    try {
      read_event_log(in);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 2u) << bad;
    }
  }
}

TEST(EventLogTest, SkipBadLinesCounts) {
  std::istringstream in("x,y,1\nbroken\na,b,oops\ny,x,2\n");
  const auto log = read_event_log(in, {.skip_bad_lines = true});
  EXPECT_EQ(log.events.size(), 2u);
  EXPECT_EQ(log.bad_lines_skipped, 2u);
}

TEST(EventLogTest, WriteReadRoundTrip) {
  const std::vector<EventRecord> events = {
      {NodeId("a"), NodeId("b"), 5}, {NodeId("b"), NodeId("a"), 7}};
  std::stringstream io;
  write_event_log(io, events);
  EXPECT_EQ(io.str(), "a,b,5\nb,a,7\n");
  EXPECT_EQ(read_event_log(io).events, events);
}
