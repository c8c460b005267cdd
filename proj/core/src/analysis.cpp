#include "weathergame/analysis.hpp"

#include <map>
#include <set>

#include "weathergame/errors.hpp"
#include "weathergame/store.hpp"

namespace weathergame::analysis {
namespace {

constexpr std::string_view kUndisclosed = "undisclosed";

std::string yes_no(const std::optional<bool>& v) {
  if (!v) return std::string(kUndisclosed);
  return *v ? "yes" : "no";
}

const std::vector<std::string_view>& row_labels() {
  static const std::vector<std::string_view> labels = {
      kGraphicsOnlyGroup,
      kMultimodalGroup,
      kNlgOnlyGroup,
      to_string(PresentationCondition::kGraphicsAndNatural),
      to_string(PresentationCondition::kGraphicsAndWmo),
      to_string(PresentationCondition::kNaturalOnly),
      to_string(PresentationCondition::kWmoOnly),
  };
  return labels;
}

bool is_pool(std::string_view label) {
  return label == kGraphicsOnlyGroup || label == kMultimodalGroup || label == kNlgOnlyGroup;
}

}  // namespace

SessionSummary summarize(const Session& session) {
  SessionSummary s;
  s.session_id = session.session_id;
  s.condition = session.condition;
  s.demographics = session.demographics;
  if (session.numeracy) {
    s.numeracy_score = session.numeracy->score;
    s.literate = session.numeracy->literate;
  }
  s.gain = session.balance;
  s.mean_confidence = mean_confidence(session);
  s.rounds = static_cast<int>(session.outcomes.size());
  s.completed = session.phase == Phase::kSummary;
  return s;
}

std::vector<SessionSummary> summarize_events(std::span<const SessionEvent> events) {
  struct Acc {
    SessionSummary s;
    int confidence_total = 0;
    int decisions = 0;
  };
  std::map<std::string, Acc> by_session;
  for (const auto& e : events) {
    auto& acc = by_session[e.session_id];
    acc.s.session_id = e.session_id;
    const auto& b = e.body;
    switch (e.kind) {
      case EventKind::kConditionAssigned:
        acc.s.condition = parse_condition(b.at("condition").get<std::string>());
        break;
      case EventKind::kDemographics:
        acc.s.demographics = demographics_from_json(b);
        break;
      case EventKind::kNumeracyAnswer:
        if (b.at("correct").get<bool>()) ++acc.s.numeracy_score;
        break;
      case EventKind::kDecision:
        acc.confidence_total += b.at("confidence").get<int>();
        ++acc.decisions;
        break;
      case EventKind::kOutcome:
        acc.s.gain += b.at("payoff").get<int>();
        ++acc.s.rounds;
        break;
      case EventKind::kSummary:
        acc.s.completed = true;
        acc.s.literate = b.at("literate").get<bool>();
        break;
      default:
        break;
    }
  }
  std::vector<SessionSummary> out;
  out.reserve(by_session.size());
  for (auto& [_, acc] : by_session) {
    if (acc.decisions > 0) acc.s.mean_confidence = static_cast<double>(acc.confidence_total) / acc.decisions;
    out.push_back(std::move(acc.s));
  }
  return out;
}

std::vector<SessionSummary> read_summaries(std::istream& jsonl) {
  const auto events = read_jsonl(jsonl);
  return summarize_events(events);
}

bool in_group(PresentationCondition condition, std::string_view label) {
  using PC = PresentationCondition;
  if (label == kGraphicsOnlyGroup) return condition == PC::kGraphicsOnly;
  if (label == kMultimodalGroup) return condition == PC::kGraphicsAndNatural || condition == PC::kGraphicsAndWmo;
  if (label == kNlgOnlyGroup) return condition == PC::kNaturalOnly || condition == PC::kWmoOnly;
  return condition == parse_condition(label);
}

std::vector<std::string> demographic_keys() {
  return {"gender", "education", "native_speaker", "risk_experience", "weather_familiarity", "literate"};
}

std::string demographic_value(const SessionSummary& s, std::string_view key) {
  const auto& d = s.demographics;
  if (key == "gender") return d.gender.value_or(std::string(kUndisclosed));
  if (key == "education") return d.education.value_or(std::string(kUndisclosed));
  if (key == "native_speaker") return yes_no(d.native_speaker);
  if (key == "risk_experience") return yes_no(d.risk_experience);
  if (key == "weather_familiarity") return yes_no(d.weather_familiarity);
  if (key == "literate") return s.literate ? "literate" : "not_literate";
  throw DomainError("unknown group-by key '" + std::string(key) + "'");
}

std::vector<ConditionAggregate> aggregate(std::span<const SessionSummary> sessions,
                                          const std::optional<std::string>& group_by) {
  if (group_by) (void)demographic_value(SessionSummary{}, *group_by);
  std::set<std::string> values;
  for (const auto& s : sessions) {
    if (s.completed) values.insert(group_by ? demographic_value(s, *group_by) : "all");
  }
  std::vector<ConditionAggregate> rows;
  for (const auto& value : values) {
    for (auto label : row_labels()) {
      ConditionAggregate row;
      row.group_value = value;
      row.label = std::string(label);
      row.pooled = is_pool(label);
      double gain_total = 0.0;
      double confidence_total = 0.0;
      for (const auto& s : sessions) {
        if (!s.completed || !in_group(s.condition, label)) continue;
        if (group_by && demographic_value(s, *group_by) != value) continue;
        ++row.n;
        gain_total += s.gain;
        confidence_total += s.mean_confidence;
      }
      if (row.n == 0) continue;
      row.mean_gain = gain_total / static_cast<double>(row.n);
      row.mean_confidence_pct = 10.0 * confidence_total / static_cast<double>(row.n);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<double> gains(std::span<const SessionSummary> sessions, std::string_view label) {
  std::vector<double> out;
  for (const auto& s : sessions) {
    if (s.completed && in_group(s.condition, label)) out.push_back(s.gain);
  }
  return out;
}

double percent_increase(double baseline, double treatment) {
  if (!(baseline > 0.0)) throw DomainError("percent increase needs a positive baseline");
  return 100.0 * (treatment - baseline) / baseline;
}

double effect(double baseline, double treatment) { return treatment - baseline; }

Json to_json(const ConditionAggregate& row) {
  Json j;
  j["group_value"] = row.group_value;
  j["label"] = row.label;
  j["pooled"] = row.pooled;
  j["n"] = row.n;
  j["mean_gain"] = row.mean_gain;
  j["mean_confidence_pct"] = row.mean_confidence_pct;
  return j;
}

Json to_json(const TestResult& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["statistic"] = r.statistic;
  j["p_value"] = r.p_value;
  j["exact"] = r.exact;
  j["degenerate"] = r.degenerate;
  return j;
}

}  // namespace weathergame::analysis
