#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weathergame/events.hpp"
#include "weathergame/forecast.hpp"
#include "weathergame/numeracy.hpp"
#include "weathergame/realizer.hpp"

namespace weathergame {

enum class PresentationCondition {
  kGraphicsOnly,
  kGraphicsAndNatural,
  kGraphicsAndWmo,
  kNaturalOnly,
  kWmoOnly,
};

inline constexpr std::array<PresentationCondition, 5> kAllConditions = {
    PresentationCondition::kGraphicsOnly, PresentationCondition::kGraphicsAndNatural,
    PresentationCondition::kGraphicsAndWmo, PresentationCondition::kNaturalOnly,
    PresentationCondition::kWmoOnly};

std::string_view to_string(PresentationCondition condition);
// Accepts "GRAPHICS_AND_WMO", "graphics_and_wmo" or "graphics-and-wmo".
PresentationCondition parse_condition(std::string_view text);

bool shows_graphics(PresentationCondition condition);
std::optional<NlgStrategy> text_strategy(PresentationCondition condition);

// Round-robin over kAllConditions.
PresentationCondition assign_condition(std::uint64_t session_counter);

struct GraphicsData {
  int rain_percent = 0;
  TemperatureDistribution temperature;

  friend bool operator==(const GraphicsData&, const GraphicsData&) = default;
};

struct PayloadEntry {
  LocationId location = LocationId::kA;
  std::optional<GraphicsData> graphics;
  std::optional<ForecastText> text;

  friend bool operator==(const PayloadEntry&, const PayloadEntry&) = default;
};

// What a player sees for one week. Text-only payloads carry no numeric
// probability.
struct PresentationPayload {
  int week = 1;
  PresentationCondition condition = PresentationCondition::kGraphicsOnly;
  std::array<PayloadEntry, kLocations> entries;

  friend bool operator==(const PresentationPayload&, const PresentationPayload&) = default;
};

Json to_json(const PresentationPayload& payload);

struct DecisionRecord {
  int week = 1;
  LocationId chosen_location = LocationId::kA;
  int confidence = 1;  // 1..10

  // Throws DomainError for week outside 1..4 or confidence outside 1..10.
  static DecisionRecord make(int week, LocationId chosen, int confidence);

  friend bool operator==(const DecisionRecord&, const DecisionRecord&) = default;
};

inline constexpr int kStake = 30;
inline constexpr int kMaxConfidence = 10;

// Confidence-weighted payoff: kStake * confidence / 10, positive when it
// stays dry at the chosen location, negative when it rains.
int round_payoff(const DecisionRecord& decision, bool rain_at_chosen);

// Seeded Bernoulli source for rain outcomes. Each draw compares a uniform
// integer in [0, 100) with the probability's hundredths, so p = 0 never
// rains and p = 1 always does.
class RainSampler {
 public:
  explicit RainSampler(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  // The stream that decides rain for one round of a session.
  static RainSampler for_round(std::uint64_t session_seed, int week);
  static std::uint64_t round_seed(std::uint64_t session_seed, int week);

  bool draw(Probability p);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::uint64_t draws_ = 0;
};

inline bool sample_rain(Probability p, RainSampler& rng) { return rng.draw(p); }

struct RoundOutcome {
  int week = 1;
  bool rain_occurred = false;
  LocationId correct_location = LocationId::kA;
  int payoff = 0;
  std::uint64_t rng_seed = 0;
  std::uint64_t rng_draw_index = 0;

  friend bool operator==(const RoundOutcome&, const RoundOutcome&) = default;
};

enum class Phase { kDemographics, kNumeracy, kRound1, kRound2, kRound3, kRound4, kSummary };

std::string_view to_string(Phase phase);
Phase round_phase(int week);
// Week number for a round phase, nullopt otherwise.
std::optional<int> week_of(Phase phase);

struct Demographics {
  std::optional<std::string> gender;
  std::optional<std::string> education;
  std::optional<bool> native_speaker;
  std::optional<bool> risk_experience;
  std::optional<bool> weather_familiarity;

  friend bool operator==(const Demographics&, const Demographics&) = default;
};

// Only the five known keys are kept; wrong value types are a DomainError.
Demographics demographics_from_json(const Json& j);
Json to_json(const Demographics& d);

struct Session {
  std::string session_id;
  std::uint64_t seed = 0;
  PresentationCondition condition = PresentationCondition::kGraphicsOnly;
  Scenario scenario;
  Phase phase = Phase::kDemographics;
  Demographics demographics;
  std::optional<NumeracyResult> numeracy;
  std::vector<DecisionRecord> decisions;
  std::vector<RoundOutcome> outcomes;
  int balance = 0;

  friend bool operator==(const Session&, const Session&) = default;
};

// A fresh session in the DEMOGRAPHICS phase. The scenario is generated from
// the seed unless one is supplied.
Session new_session(std::string session_id, std::uint64_t seed, PresentationCondition condition,
                    std::optional<Scenario> scenario = std::nullopt);

struct EventDraft {
  EventKind kind;
  Json body;
};

// SESSION_CREATED and CONDITION_ASSIGNED bodies for a new session.
std::vector<EventDraft> opening_events(const Session& session, std::uint64_t assignment_counter);

using NumeracyAnswers = std::vector<NumeracyAnswer>;
using PhaseInput = std::variant<Demographics, NumeracyAnswers, DecisionRecord>;

struct Transition {
  Session session;
  std::vector<EventDraft> events;
};

// Pure successor function. Throws StateError on phase mismatch (including
// any input once the session is in SUMMARY), IdempotencyError when a
// decision names a round that already completed, ProtocolError for off-path
// numeracy answers and DomainError for out-of-range decisions.
Transition advance(const Session& session, const PhaseInput& input,
                   const QuestionBank& bank = QuestionBank::standard());

// Requires phase == ROUND_week; StateError otherwise.
PresentationPayload build_payload(const Session& session, int week,
                                  const Realizer& realizer = Realizer());

double mean_confidence(const Session& session);

}  // namespace weathergame
