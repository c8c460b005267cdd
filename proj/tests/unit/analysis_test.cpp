#include "weathergame/analysis.hpp"

#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "weathergame/errors.hpp"
#include "weathergame/simulate.hpp"

namespace weathergame::analysis {
namespace {

using PC = PresentationCondition;

SessionSummary completed(std::string id, PC condition, int gain, double confidence = 5.0) {
  SessionSummary s;
  s.session_id = std::move(id);
  s.condition = condition;
  s.gain = gain;
  s.mean_confidence = confidence;
  s.rounds = 4;
  s.completed = true;
  return s;
}

const ConditionAggregate* find_row(const std::vector<ConditionAggregate>& rows, std::string_view label,
                                   std::string_view value = "all") {
  for (const auto& r : rows) {
    if (r.label == label && r.group_value == value) return &r;
  }
  return nullptr;
}

TEST(AggregateTest, PoolMeans) {
  const std::vector<SessionSummary> s = {completed("a", PC::kGraphicsAndWmo, 100, 6),
                                         completed("b", PC::kGraphicsAndNatural, 120, 8)};
  const auto rows = aggregate(s);
  const auto* multi = find_row(rows, kMultimodalGroup);
  ASSERT_NE(multi, nullptr);
  EXPECT_TRUE(multi->pooled);
  EXPECT_EQ(multi->n, 2u);
  EXPECT_DOUBLE_EQ(multi->mean_gain, 110.0);
  EXPECT_DOUBLE_EQ(multi->mean_confidence_pct, 70.0);
  EXPECT_EQ(find_row(rows, kGraphicsOnlyGroup), nullptr);  // n == 0 rows omitted
  ASSERT_NE(find_row(rows, "GRAPHICS_AND_WMO"), nullptr);
  EXPECT_FALSE(find_row(rows, "GRAPHICS_AND_WMO")->pooled);
}

TEST(AggregateTest, PoolIsSessionWeighted) {
  const std::vector<SessionSummary> s = {completed("a", PC::kNaturalOnly, 30),
                                         completed("b", PC::kNaturalOnly, 60),
                                         completed("c", PC::kWmoOnly, -90)};
  const auto rows = aggregate(s);
  EXPECT_DOUBLE_EQ(find_row(rows, kNlgOnlyGroup)->mean_gain, 0.0);
  EXPECT_DOUBLE_EQ(find_row(rows, "NATURAL_ONLY")->mean_gain, 45.0);
}

TEST(AggregateTest, IncompleteSessionsIgnored) {
  auto partial = completed("p", PC::kGraphicsOnly, 999);
  partial.completed = false;
  EXPECT_TRUE(aggregate(std::vector{partial}).empty());
  EXPECT_TRUE(aggregate(std::vector<SessionSummary>{}).empty());
}

TEST(AggregateTest, GroupByGender) {
  auto f = completed("f", PC::kGraphicsOnly, 30);
  f.demographics.gender = "female";
  auto m = completed("m", PC::kGraphicsOnly, -30);
  m.demographics.gender = "male";
  const auto u = completed("u", PC::kGraphicsOnly, 12);
  const auto rows = aggregate(std::vector{f, m, u}, std::string("gender"));
  EXPECT_DOUBLE_EQ(find_row(rows, kGraphicsOnlyGroup, "female")->mean_gain, 30.0);
  EXPECT_DOUBLE_EQ(find_row(rows, kGraphicsOnlyGroup, "male")->mean_gain, -30.0);
  EXPECT_DOUBLE_EQ(find_row(rows, kGraphicsOnlyGroup, "undisclosed")->mean_gain, 12.0);
  EXPECT_THROW(aggregate(std::vector{f}, std::string("shoe_size")), DomainError);
}

TEST(AggregateTest, GroupByLiteracy) {
  auto lit = completed("l", PC::kWmoOnly, 18);
  lit.literate = true;
  const auto rows = aggregate(std::vector{lit, completed("n", PC::kWmoOnly, 6)}, std::string("literate"));
  EXPECT_DOUBLE_EQ(find_row(rows, "WMO_ONLY", "literate")->mean_gain, 18.0);
  EXPECT_DOUBLE_EQ(find_row(rows, "WMO_ONLY", "not_literate")->mean_gain, 6.0);
}

TEST(GroupTest, Membership) {
  EXPECT_TRUE(in_group(PC::kGraphicsOnly, kGraphicsOnlyGroup));
  EXPECT_TRUE(in_group(PC::kGraphicsAndNatural, kMultimodalGroup));
  EXPECT_FALSE(in_group(PC::kNaturalOnly, kMultimodalGroup));
  EXPECT_TRUE(in_group(PC::kWmoOnly, kNlgOnlyGroup));
  EXPECT_TRUE(in_group(PC::kWmoOnly, "wmo-only"));
  EXPECT_THROW(in_group(PC::kWmoOnly, "EVERYTHING"), DomainError);
}

TEST(EffectTest, DerivedQuantities) {
  EXPECT_NEAR(effect(81.15, 117.51), 36.36, 1e-9);
  EXPECT_NEAR(percent_increase(80.0, 100.0), 25.0, 1e-12);
  EXPECT_NEAR(percent_increase(100.0, 50.0), -50.0, 1e-12);
  EXPECT_THROW(percent_increase(0.0, 10.0), DomainError);
  EXPECT_THROW(percent_increase(-5.0, 10.0), DomainError);
}

TEST(ReadSummariesTest, EmptyStream) {
  std::istringstream in("");
  EXPECT_TRUE(read_summaries(in).empty());
}

TEST(ReadSummariesTest, MalformedLineNumberReported) {
  std::istringstream in(
      R"({"event_id":1,"session_id":"s","timestamp":"2016-06-01T00:00:00.000Z","kind":"SESSION_CREATED","body":{}})"
      "\n\nnot json\n");
  try {
    read_summaries(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

// Means recomputed straight from the engine's sessions, independently of
// the event-log path and aggregate().
TEST(ReadSummariesTest, MatchesEngineStateForSimulatedCohort) {
  SimulationConfig config;
  config.policy = AgentPolicy::literacy(0.5);
  config.sessions = 60;
  config.master_seed = 99;
  const auto sim = simulate(config);

  std::istringstream in(sim.events_jsonl);
  const auto summaries = read_summaries(in);
  ASSERT_EQ(summaries.size(), sim.sessions.size());

  std::map<std::string, const Session*> by_id;
  for (const auto& s : sim.sessions) by_id[s.session_id] = &s;
  for (const auto& s : summaries) EXPECT_EQ(s, summarize(*by_id.at(s.session_id)));

  std::map<PC, std::pair<double, int>> totals;
  for (const auto& s : sim.sessions) {
    totals[s.condition].first += s.balance;
    totals[s.condition].second += 1;
  }
  const auto rows = aggregate(summaries);
  for (const auto& [condition, acc] : totals) {
    if (condition == PC::kGraphicsOnly) {
      EXPECT_DOUBLE_EQ(find_row(rows, kGraphicsOnlyGroup)->mean_gain, acc.first / acc.second);
      continue;
    }
    const auto* row = find_row(rows, to_string(condition));
    ASSERT_NE(row, nullptr);
    EXPECT_EQ(row->n, static_cast<std::size_t>(acc.second));
    EXPECT_DOUBLE_EQ(row->mean_gain, acc.first / acc.second);
  }
  const auto& m1 = totals[PC::kGraphicsAndNatural];
  const auto& m2 = totals[PC::kGraphicsAndWmo];
  EXPECT_DOUBLE_EQ(find_row(rows, kMultimodalGroup)->mean_gain, (m1.first + m2.first) / (m1.second + m2.second));
  EXPECT_EQ(gains(summaries, kMultimodalGroup).size(), static_cast<std::size_t>(m1.second + m2.second));
}

TEST(JsonTest, RowShape) {
  ConditionAggregate row{"all", "NLG_ONLY", true, 3, 12.5, 60.0};
  EXPECT_EQ(to_json(row).dump(),
            R"({"group_value":"all","label":"NLG_ONLY","pooled":true,"n":3,"mean_gain":12.5,"mean_confidence_pct":60.0})");
}

}  // namespace
}  // namespace weathergame::analysis
