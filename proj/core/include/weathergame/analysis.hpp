#pragma once

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weathergame/events.hpp"
#include "weathergame/game.hpp"
#include "weathergame/stats.hpp"

namespace weathergame::analysis {

// Per-session facts needed for reporting, extracted either from an
// in-memory Session or directly from logged events.
struct SessionSummary {
  std::string session_id;
  PresentationCondition condition = PresentationCondition::kGraphicsOnly;
  Demographics demographics;
  int numeracy_score = 0;
  bool literate = false;
  int gain = 0;
  double mean_confidence = 0.0;  // 1..10 scale
  int rounds = 0;
  bool completed = false;

  friend bool operator==(const SessionSummary&, const SessionSummary&) = default;
};

SessionSummary summarize(const Session& session);

// Reads summaries straight from event records, without the game engine.
// Events may arrive in any order; they are grouped by session.
std::vector<SessionSummary> summarize_events(std::span<const SessionEvent> events);

// JSON-lines export -> summaries. ParseError names the offending line.
std::vector<SessionSummary> read_summaries(std::istream& jsonl);

// Pooled condition groups used in reports.
inline constexpr std::string_view kGraphicsOnlyGroup = "GRAPHICS_ONLY";
inline constexpr std::string_view kMultimodalGroup = "MULTIMODAL";
inline constexpr std::string_view kNlgOnlyGroup = "NLG_ONLY";

// True if the condition belongs to the pool or single-condition label.
// Throws DomainError for an unknown label.
bool in_group(PresentationCondition condition, std::string_view label);

// Keys accepted by group_by.
std::vector<std::string> demographic_keys();
// Value of a demographic key for one session ("undisclosed" when absent).
std::string demographic_value(const SessionSummary& s, std::string_view key);

struct ConditionAggregate {
  std::string group_value;  // demographic value, or "all" without grouping
  std::string label;        // pool or single condition
  bool pooled = false;
  std::size_t n = 0;
  double mean_gain = 0.0;
  double mean_confidence_pct = 0.0;  // mean confidence x 10
};

// Means over completed sessions. Rows: the three pools, then the four
// conditions inside MULTIMODAL and NLG_ONLY, per group value; rows with
// n == 0 are omitted. An unknown group_by key is a DomainError.
std::vector<ConditionAggregate> aggregate(std::span<const SessionSummary> sessions,
                                          const std::optional<std::string>& group_by = std::nullopt);

// Final gains of completed sessions inside a pool or condition.
std::vector<double> gains(std::span<const SessionSummary> sessions, std::string_view label);

// 100 * (treatment - baseline) / baseline. DomainError unless baseline > 0.
double percent_increase(double baseline, double treatment);
// treatment - baseline.
double effect(double baseline, double treatment);

Json to_json(const ConditionAggregate& row);
Json to_json(const TestResult& result);

}  // namespace weathergame::analysis
