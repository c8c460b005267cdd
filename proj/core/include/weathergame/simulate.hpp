#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "weathergame/game.hpp"
#include "weathergame/recorder.hpp"
#include "weathergame/store.hpp"

namespace weathergame::analysis {

// Scripted stand-ins for human players.
//
//   ORACLE       picks the location with higher expected sales; confidence
//                10 when its rain probability is at most 0.44, otherwise
//                10 * (1 - p) rounded, at least 1. Answers numeracy
//                items correctly.
//   RANDOM       uniform location, uniform confidence 1..10, numeracy
//                answers wrong.
//   LITERACY(q)  per round plays ORACLE with probability q, else RANDOM;
//                each numeracy item is correct with probability q.
//
// Every decision consumes the same random draws whatever the policy, so
// runs that differ only in q share their random choices.
struct AgentPolicy {
  enum class Kind { kOracle, kRandom, kLiteracy };

  Kind kind = Kind::kRandom;
  double skill = 0.0;  // in [0, 1]; 1 for ORACLE, 0 for RANDOM

  static AgentPolicy oracle() { return {Kind::kOracle, 1.0}; }
  static AgentPolicy random() { return {Kind::kRandom, 0.0}; }
  // DomainError unless 0 <= q <= 1.
  static AgentPolicy literacy(double q);
  // "oracle", "random" or "literacy:<q>".
  static AgentPolicy parse(std::string_view text);

  std::string to_string() const;
};

int oracle_confidence(Probability rain_at_chosen);

DecisionRecord decide(const AgentPolicy& policy, const Session& session, int week, std::mt19937_64& rng);

// Plays a recorded session from DEMOGRAPHICS to SUMMARY.
void play_session(SessionRecorder& recorder, const AgentPolicy& policy, std::mt19937_64& rng,
                  const QuestionBank& bank = QuestionBank::standard());

struct SimulationConfig {
  AgentPolicy policy;
  std::size_t sessions = 1;
  // Fixed condition, or round-robin assignment when empty.
  std::optional<PresentationCondition> condition;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;
};

struct SimulationResult {
  std::vector<Session> sessions;  // by session index
  std::string events_jsonl;       // canonical export of every event
};

// Deterministic in the config; the thread count does not change the output.
// DomainError if sessions == 0.
SimulationResult simulate(const SimulationConfig& config);

std::string simulated_session_id(std::uint64_t master_seed, std::size_t index);

}  // namespace weathergame::analysis
