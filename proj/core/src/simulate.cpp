#include "weathergame/simulate.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "weathergame/errors.hpp"
#include "weathergame/rng.hpp"

namespace weathergame::analysis {
namespace {

constexpr std::uint64_t kAgentStream = 0xa6e47ULL;

// 2016-06-01T00:00:00Z
constexpr Timestamp kSimulationEpoch{std::chrono::milliseconds{1464739200000LL}};

std::string format_answer(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", value);
  return buf;
}

Demographics draw_demographics(std::mt19937_64& rng) {
  Demographics d;
  d.gender = uniform_below(rng, 2) == 0 ? "female" : "male";
  d.education = uniform_below(rng, 2) == 0 ? "bsc_or_higher" : "below_bsc";
  d.native_speaker = uniform_below(rng, 2) == 0;
  d.risk_experience = uniform_below(rng, 2) == 0;
  d.weather_familiarity = uniform_below(rng, 2) == 0;
  return d;
}

NumeracyAnswers answer_numeracy(const AgentPolicy& policy, const QuestionBank& bank, std::mt19937_64& rng) {
  NumeracyAnswers answers;
  for (;;) {
    const auto progress = walk_numeracy(answers, bank);
    if (progress.next == nullptr) break;
    const bool correct = uniform_unit(rng) < policy.skill;
    const double value = correct ? progress.next->answer : progress.next->answer + 7.0;
    answers.push_back({progress.next->id, format_answer(value)});
  }
  return answers;
}

}  // namespace

AgentPolicy AgentPolicy::literacy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("literacy skill must lie in [0, 1]");
  return {Kind::kLiteracy, q};
}

AgentPolicy AgentPolicy::parse(std::string_view text) {
  if (text == "oracle") return oracle();
  if (text == "random") return random();
  constexpr std::string_view prefix = "literacy:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string number(text.substr(prefix.size()));
    char* end = nullptr;
    const double q = std::strtod(number.c_str(), &end);
    if (number.empty() || end != number.c_str() + number.size()) {
      throw DomainError("bad literacy skill '" + number + "'");
    }
    return literacy(q);
  }
  throw DomainError("unknown policy '" + std::string(text) + "' (oracle|random|literacy:<q>)");
}

std::string AgentPolicy::to_string() const {
  switch (kind) {
    case Kind::kOracle: return "oracle";
    case Kind::kRandom: return "random";
    case Kind::kLiteracy: return "literacy:" + format_answer(skill);
  }
  return "?";
}

int oracle_confidence(Probability rain_at_chosen) {
  const int h = rain_at_chosen.hundredths();
  if (h <= 44) return kMaxConfidence;
  return std::max(1, (100 - h + 5) / 10);
}

DecisionRecord decide(const AgentPolicy& policy, const Session& session, int week, std::mt19937_64& rng) {
  const double coin = uniform_unit(rng);
  const auto random_location = uniform_below(rng, 2) == 0 ? LocationId::kA : LocationId::kB;
  const int random_confidence = uniform_int(rng, 1, kMaxConfidence);

  if (coin < policy.skill) {
    const auto best = best_location(session.scenario, week);
    const auto p = session.scenario.at(week, best).rain_prob;
    return DecisionRecord::make(week, best, oracle_confidence(p));
  }
  return DecisionRecord::make(week, random_location, random_confidence);
}

void play_session(SessionRecorder& recorder, const AgentPolicy& policy, std::mt19937_64& rng,
                  const QuestionBank& bank) {
  recorder.apply(draw_demographics(rng), bank);
  recorder.apply(answer_numeracy(policy, bank, rng), bank);
  for (int week = 1; week <= kWeeks; ++week) {
    recorder.show_round(week);
    recorder.apply(decide(policy, recorder.session(), week, rng), bank);
  }
}

std::string simulated_session_id(std::uint64_t master_seed, std::size_t index) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "sim-%08llx-%06zu",
                static_cast<unsigned long long>(master_seed & 0xffffffffULL), index);
  return buf;
}

SimulationResult simulate(const SimulationConfig& config) {
  if (config.sessions == 0) throw DomainError("simulate needs at least one session");
  MemoryEventStore store;
  SimulationResult result;
  result.sessions.resize(config.sessions);

  auto run_one = [&](std::size_t index) {
    const std::uint64_t seed = derive_seed(config.master_seed, index);
    const auto condition = config.condition.value_or(assign_condition(index));
    const Timestamp start = kSimulationEpoch + std::chrono::minutes(index);
    auto recorder = SessionRecorder::start(store, stepping_clock(start, std::chrono::seconds(1)),
                                           new_session(simulated_session_id(config.master_seed, index),
                                                       seed, condition),
                                           index);
    std::mt19937_64 rng(derive_seed(seed, kAgentStream));
    play_session(recorder, config.policy, rng);
    result.sessions[index] = recorder.session();
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, config.sessions));
  if (threads == 1) {
    for (std::size_t i = 0; i < config.sessions; ++i) run_one(i);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < config.sessions; i += threads) run_one(i);
      });
    }
    for (auto& w : workers) w.join();
  }
  result.events_jsonl = store.export_jsonl();
  return result;
}

}  // namespace weathergame::analysis
