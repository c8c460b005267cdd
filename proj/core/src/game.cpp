#include "weathergame/game.hpp"

#include <algorithm>
#include <cctype>

#include "weathergame/errors.hpp"
#include "weathergame/rng.hpp"

namespace weathergame {
namespace {

constexpr std::array<std::string_view, 5> kConditionNames = {
    "GRAPHICS_ONLY", "GRAPHICS_AND_NATURAL", "GRAPHICS_AND_WMO", "NATURAL_ONLY", "WMO_ONLY"};

constexpr std::array<std::string_view, 7> kPhaseNames = {
    "DEMOGRAPHICS", "NUMERACY", "ROUND_1", "ROUND_2", "ROUND_3", "ROUND_4", "SUMMARY"};

constexpr std::uint64_t kRainStream = 0x5241494eULL;

template <typename T>
std::optional<T> optional_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  const auto& v = j.at(key);
  if constexpr (std::is_same_v<T, bool>) {
    if (!v.is_boolean()) throw DomainError(std::string("demographics field '") + key + "' must be a boolean");
  } else {
    if (!v.is_string()) throw DomainError(std::string("demographics field '") + key + "' must be a string");
  }
  return v.get<T>();
}

Json summary_body(const Session& s) {
  Json j;
  j["balance"] = s.balance;
  j["rounds"] = s.outcomes.size();
  j["mean_confidence"] = mean_confidence(s);
  j["numeracy_score"] = s.numeracy ? s.numeracy->score : 0;
  j["literate"] = s.numeracy ? s.numeracy->literate : false;
  return j;
}

Transition advance_demographics(const Session& s, const Demographics& d) {
  if (s.phase != Phase::kDemographics) {
    throw StateError("demographics not accepted in phase " + std::string(to_string(s.phase)));
  }
  Transition t{s, {}};
  t.session.demographics = d;
  t.session.phase = Phase::kNumeracy;
  t.events.push_back({EventKind::kDemographics, to_json(d)});
  return t;
}

Transition advance_numeracy(const Session& s, const NumeracyAnswers& answers,
                            const QuestionBank& bank) {
  if (s.phase != Phase::kNumeracy) {
    throw StateError("numeracy answers not accepted in phase " + std::string(to_string(s.phase)));
  }
  Transition t{s, {}};
  t.session.numeracy = numeracy_score(answers, bank);
  t.session.phase = Phase::kRound1;
  std::size_t index = 0;
  for (const auto& a : t.session.numeracy->answers) {
    Json body;
    body["index"] = ++index;
    body["question_id"] = a.question_id;
    body["answer"] = a.given_answer;
    body["correct"] = a.correct;
    t.events.push_back({EventKind::kNumeracyAnswer, std::move(body)});
  }
  return t;
}

Transition advance_round(const Session& s, const DecisionRecord& d) {
  const auto week = week_of(s.phase);
  if (!week) {
    if (s.phase == Phase::kSummary) throw StateError("session already finished");
    throw StateError("decision not accepted in phase " + std::string(to_string(s.phase)));
  }
  if (d.week < *week) {
    throw IdempotencyError("week " + std::to_string(d.week) + " has already been played");
  }
  if (d.week != *week) {
    throw StateError("decision for week " + std::to_string(d.week) + " but current round is " +
                     std::to_string(*week));
  }
  const auto checked = DecisionRecord::make(d.week, d.chosen_location, d.confidence);

  auto sampler = RainSampler::for_round(s.seed, checked.week);
  const auto draw_index = sampler.draws();
  const bool rain = sample_rain(s.scenario.at(checked.week, checked.chosen_location).rain_prob, sampler);

  RoundOutcome outcome;
  outcome.week = checked.week;
  outcome.rain_occurred = rain;
  outcome.correct_location = best_location(s.scenario, checked.week);
  outcome.payoff = round_payoff(checked, rain);
  outcome.rng_seed = sampler.seed();
  outcome.rng_draw_index = draw_index;

  Transition t{s, {}};
  t.session.decisions.push_back(checked);
  t.session.outcomes.push_back(outcome);
  t.session.balance += outcome.payoff;
  t.session.phase = checked.week == kWeeks ? Phase::kSummary : round_phase(checked.week + 1);

  Json decision;
  decision["week"] = checked.week;
  decision["location"] = to_string(checked.chosen_location);
  decision["confidence"] = checked.confidence;
  t.events.push_back({EventKind::kDecision, std::move(decision)});

  Json out;
  out["week"] = outcome.week;
  out["rain_occurred"] = outcome.rain_occurred;
  out["correct_location"] = to_string(outcome.correct_location);
  out["payoff"] = outcome.payoff;
  out["balance"] = t.session.balance;
  out["rng"] = {{"seed", std::to_string(outcome.rng_seed)}, {"draw_index", outcome.rng_draw_index}};
  t.events.push_back({EventKind::kOutcome, std::move(out)});

  if (t.session.phase == Phase::kSummary) {
    t.events.push_back({EventKind::kSummary, summary_body(t.session)});
  }
  return t;
}

}  // namespace

std::string_view to_string(PresentationCondition condition) {
  return kConditionNames[static_cast<std::size_t>(condition)];
}

PresentationCondition parse_condition(std::string_view text) {
  std::string tag(text);
  std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char c) {
    return c == '-' ? '_' : static_cast<char>(std::toupper(c));
  });
  for (std::size_t i = 0; i < kConditionNames.size(); ++i) {
    if (kConditionNames[i] == tag) return static_cast<PresentationCondition>(i);
  }
  throw DomainError("unknown presentation condition '" + std::string(text) + "'");
}

bool shows_graphics(PresentationCondition condition) {
  return condition == PresentationCondition::kGraphicsOnly ||
         condition == PresentationCondition::kGraphicsAndNatural ||
         condition == PresentationCondition::kGraphicsAndWmo;
}

std::optional<NlgStrategy> text_strategy(PresentationCondition condition) {
  switch (condition) {
    case PresentationCondition::kGraphicsOnly: return std::nullopt;
    case PresentationCondition::kGraphicsAndNatural:
    case PresentationCondition::kNaturalOnly: return NlgStrategy::kNatural;
    case PresentationCondition::kGraphicsAndWmo:
    case PresentationCondition::kWmoOnly: return NlgStrategy::kWmoBased;
  }
  return std::nullopt;
}

PresentationCondition assign_condition(std::uint64_t session_counter) {
  return kAllConditions[session_counter % kAllConditions.size()];
}

Json to_json(const PresentationPayload& payload) {
  Json j;
  j["week"] = payload.week;
  j["condition"] = to_string(payload.condition);
  Json locations = Json::array();
  for (const auto& e : payload.entries) {
    Json entry;
    entry["location"] = to_string(e.location);
    if (e.graphics) {
      entry["graphics"] = {{"rain_percent", e.graphics->rain_percent},
                           {"temperature",
                            {{"q10", e.graphics->temperature.q10},
                             {"q50", e.graphics->temperature.q50},
                             {"q90", e.graphics->temperature.q90}}}};
    }
    if (e.text) {
      entry["text"] = {{"strategy", to_string(e.text->strategy)},
                       {"rainfall", e.text->rainfall_sentence},
                       {"temperature", e.text->temperature_sentence}};
    }
    locations.push_back(std::move(entry));
  }
  j["locations"] = std::move(locations);
  return j;
}

DecisionRecord DecisionRecord::make(int week, LocationId chosen, int confidence) {
  check_week(week);
  if (confidence < 1 || confidence > kMaxConfidence) {
    throw DomainError("confidence must be in 1..10, got " + std::to_string(confidence));
  }
  return {week, chosen, confidence};
}

int round_payoff(const DecisionRecord& decision, bool rain_at_chosen) {
  const int magnitude = kStake * decision.confidence / kMaxConfidence;
  return rain_at_chosen ? -magnitude : magnitude;
}

std::uint64_t RainSampler::round_seed(std::uint64_t session_seed, int week) {
  return derive_seed(derive_seed(session_seed, kRainStream), static_cast<std::uint64_t>(week));
}

RainSampler RainSampler::for_round(std::uint64_t session_seed, int week) {
  return RainSampler(round_seed(session_seed, week));
}

bool RainSampler::draw(Probability p) {
  ++draws_;
  return static_cast<int>(uniform_below(rng_, 100)) < p.hundredths();
}

std::string_view to_string(Phase phase) { return kPhaseNames[static_cast<std::size_t>(phase)]; }

Phase round_phase(int week) {
  check_week(week);
  return static_cast<Phase>(static_cast<int>(Phase::kRound1) + week - 1);
}

std::optional<int> week_of(Phase phase) {
  const int i = static_cast<int>(phase);
  if (i < static_cast<int>(Phase::kRound1) || i > static_cast<int>(Phase::kRound4)) return std::nullopt;
  return i - static_cast<int>(Phase::kRound1) + 1;
}

Demographics demographics_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("demographics must be a JSON object");
  Demographics d;
  d.gender = optional_field<std::string>(j, "gender");
  d.education = optional_field<std::string>(j, "education");
  d.native_speaker = optional_field<bool>(j, "native_speaker");
  d.risk_experience = optional_field<bool>(j, "risk_experience");
  d.weather_familiarity = optional_field<bool>(j, "weather_familiarity");
  return d;
}

Json to_json(const Demographics& d) {
  Json j = Json::object();
  if (d.gender) j["gender"] = *d.gender;
  if (d.education) j["education"] = *d.education;
  if (d.native_speaker) j["native_speaker"] = *d.native_speaker;
  if (d.risk_experience) j["risk_experience"] = *d.risk_experience;
  if (d.weather_familiarity) j["weather_familiarity"] = *d.weather_familiarity;
  return j;
}

Session new_session(std::string session_id, std::uint64_t seed, PresentationCondition condition,
                    std::optional<Scenario> scenario) {
  Session s;
  s.session_id = std::move(session_id);
  s.seed = seed;
  s.condition = condition;
  s.scenario = scenario ? std::move(*scenario) : generate_scenario(seed);
  return s;
}

std::vector<EventDraft> opening_events(const Session& session, std::uint64_t assignment_counter) {
  Json created;
  created["session_id"] = session.session_id;
  created["seed"] = std::to_string(session.seed);
  created["scenario"] = to_json(session.scenario);
  Json assigned;
  assigned["condition"] = to_string(session.condition);
  assigned["assignment_counter"] = assignment_counter;
  return {{EventKind::kSessionCreated, std::move(created)},
          {EventKind::kConditionAssigned, std::move(assigned)}};
}

Transition advance(const Session& session, const PhaseInput& input, const QuestionBank& bank) {
  return std::visit(
      [&](const auto& value) -> Transition {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, Demographics>) {
          return advance_demographics(session, value);
        } else if constexpr (std::is_same_v<T, NumeracyAnswers>) {
          return advance_numeracy(session, value, bank);
        } else {
          return advance_round(session, value);
        }
      },
      input);
}

PresentationPayload build_payload(const Session& session, int week, const Realizer& realizer) {
  check_week(week);
  if (session.phase != round_phase(week)) {
    throw StateError("week " + std::to_string(week) + " is not the current round (phase " +
                     std::string(to_string(session.phase)) + ")");
  }
  PresentationPayload payload;
  payload.week = week;
  payload.condition = session.condition;
  const auto strategy = text_strategy(session.condition);
  for (auto location : {LocationId::kA, LocationId::kB}) {
    const auto& f = session.scenario.at(week, location);
    auto& entry = payload.entries[static_cast<std::size_t>(location)];
    entry.location = location;
    if (shows_graphics(session.condition)) entry.graphics = GraphicsData{f.rain_prob.percent(), f.temperature};
    if (strategy) entry.text = realizer.forecast(f, *strategy);
  }
  return payload;
}

double mean_confidence(const Session& session) {
  if (session.decisions.empty()) return 0.0;
  double total = 0.0;
  for (const auto& d : session.decisions) total += d.confidence;
  return total / static_cast<double>(session.decisions.size());
}

}  // namespace weathergame
