#include "weathergame/store.hpp"

#include <cstdio>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>

#include "weathergame/errors.hpp"

namespace weathergame {
namespace {

using namespace std::chrono_literals;

const Timestamp kT0 = parse_timestamp("2016-06-01T09:30:00.250Z");

SessionEvent ev(const std::string& session, std::uint64_t id, EventKind kind = EventKind::kDecision,
                Json body = Json::object(), Timestamp t = kT0) {
  return {id, session, t, kind, std::move(body)};
}

std::string temp_path(const std::string& name) {
  const std::string path = ::testing::TempDir() + "/" + name;
  std::remove(path.c_str());
  return path;
}

TEST(TimestampTest, Rfc3339Millis) {
  EXPECT_EQ(format_timestamp(kT0), "2016-06-01T09:30:00.250Z");
  EXPECT_EQ(format_timestamp(Timestamp{}), "1970-01-01T00:00:00.000Z");
  EXPECT_EQ(parse_timestamp(format_timestamp(kT0 + 86399999ms)), kT0 + 86399999ms);
  EXPECT_THROW(parse_timestamp("2016-06-01 09:30:00"), DomainError);
  EXPECT_THROW(parse_timestamp("2016-13-01T09:30:00.000Z"), DomainError);
}

TEST(EventLineTest, CanonicalFieldOrder) {
  const auto line = to_json_line(ev("s1", 1, EventKind::kOutcome, {{"payoff", 3}}));
  EXPECT_EQ(line,
            R"({"event_id":1,"session_id":"s1","timestamp":"2016-06-01T09:30:00.250Z","kind":"OUTCOME","body":{"payoff":3}})");
  EXPECT_EQ(event_from_json_line(line), ev("s1", 1, EventKind::kOutcome, {{"payoff", 3}}));
}

TEST(EventLineTest, OversizedLineRejected) {
  EXPECT_THROW(to_json_line(ev("s1", 1, EventKind::kDemographics, {{"x", std::string(17000, 'a')}})),
               std::length_error);
}

TEST(MemoryStoreTest, SequenceRules) {
  MemoryEventStore store;
  EXPECT_NO_THROW(store.append(ev("s1", 1)));
  EXPECT_THROW(store.append(ev("s1", 3)), SequenceError);
  EXPECT_NO_THROW(store.append(ev("s1", 2)));
  EXPECT_THROW(store.append(ev("s1", 2)), SequenceError);
  EXPECT_THROW(store.append(ev("s2", 0)), SequenceError);
  EXPECT_EQ(store.last_event_id("s1"), 2u);
  EXPECT_EQ(store.load_session("s1").size(), 2u);
}

TEST(MemoryStoreTest, BatchIsAllOrNothing) {
  MemoryEventStore store;
  const std::vector<SessionEvent> bad = {ev("s1", 1), ev("s1", 2), ev("s1", 4)};
  EXPECT_THROW(store.append_batch(bad), SequenceError);
  EXPECT_EQ(store.event_count(), 0u);
  const std::vector<SessionEvent> good = {ev("s1", 1), ev("s2", 1), ev("s1", 2)};
  store.append_batch(good);
  EXPECT_EQ(store.event_count(), 3u);
}

TEST(MemoryStoreTest, UnknownSessionNotFound) {
  MemoryEventStore store;
  EXPECT_THROW(store.load_session("nope"), NotFoundError);
}

TEST(ExportTest, EmptyStoreExportsNothing) {
  MemoryEventStore store;
  EXPECT_EQ(store.export_jsonl(), "");
}

TEST(ExportTest, SortedBySessionThenEvent) {
  MemoryEventStore store;
  for (std::uint64_t id = 1; id <= 3; ++id) {
    store.append(ev("zeta", id));
    store.append(ev("alpha", id));
  }
  std::istringstream in(store.export_jsonl());
  const auto events = read_jsonl(in);
  ASSERT_EQ(events.size(), 6u);
  EXPECT_EQ(events[0].session_id, "alpha");
  EXPECT_EQ(events[2].event_id, 3u);
  EXPECT_EQ(events[3].session_id, "zeta");
  EXPECT_EQ(store.export_jsonl(), store.export_jsonl());
}

TEST(ExportTest, FilterByConditionAndCreationTime) {
  MemoryEventStore store;
  store.append(ev("a", 1, EventKind::kSessionCreated, Json::object(), kT0));
  store.append(ev("a", 2, EventKind::kConditionAssigned, {{"condition", "WMO_ONLY"}}, kT0));
  store.append(ev("b", 1, EventKind::kSessionCreated, Json::object(), kT0 + 1h));
  store.append(ev("b", 2, EventKind::kConditionAssigned, {{"condition", "GRAPHICS_ONLY"}}, kT0 + 1h));

  auto count = [&](const ExportFilter& f) {
    std::istringstream in(store.export_jsonl(f));
    return read_jsonl(in).size();
  };
  EXPECT_EQ(count({}), 4u);
  EXPECT_EQ(count({.condition = PresentationCondition::kWmoOnly}), 2u);
  EXPECT_EQ(count({.condition = PresentationCondition::kNaturalOnly}), 0u);
  EXPECT_EQ(count({.from = kT0 + 30min}), 2u);
  EXPECT_EQ(count({.to = kT0}), 2u);
}

TEST(ReadJsonlTest, ReportsLineNumber) {
  std::istringstream in(to_json_line(ev("s", 1)) + "\n\n{not json}\n");
  try {
    read_jsonl(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(FileStoreTest, PersistsAndReloads) {
  const auto path = temp_path("store_reload.jsonl");
  {
    FileEventStore store(path);
    store.append(ev("s1", 1));
    store.append(ev("s1", 2, EventKind::kOutcome, {{"payoff", -12}}));
  }
  FileEventStore reopened(path);
  EXPECT_EQ(reopened.last_event_id("s1"), 2u);
  EXPECT_EQ(reopened.load_session("s1")[1].body.at("payoff"), -12);
  EXPECT_THROW(reopened.append(ev("s1", 2)), SequenceError);
  reopened.append(ev("s1", 3));
  FileEventStore again(path);
  EXPECT_EQ(again.event_count(), 3u);
}

TEST(FileStoreTest, CorruptFileRefusedOnOpen) {
  const auto path = temp_path("store_corrupt.jsonl");
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs((to_json_line(ev("s1", 1)) + "\n" + to_json_line(ev("s1", 3)) + "\n").c_str(), f);
    std::fclose(f);
  }
  EXPECT_THROW(FileEventStore{path}, SequenceError);
}

TEST(MemoryStoreTest, ConcurrentAppendsToDistinctSessions) {
  MemoryEventStore store;
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&store, t] {
      const std::string id = "s" + std::to_string(t);
      for (std::uint64_t i = 1; i <= 200; ++i) store.append(ev(id, i));
    });
  }
  std::thread reader([&store] {
    for (int i = 0; i < 50; ++i) (void)store.export_jsonl();
  });
  for (auto& th : threads) th.join();
  reader.join();
  EXPECT_EQ(store.event_count(), 1600u);
  for (int t = 0; t < 8; ++t) EXPECT_EQ(store.last_event_id("s" + std::to_string(t)), 200u);
}

}  // namespace
}  // namespace weathergame
