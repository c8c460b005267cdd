#include <random>

#include <benchmark/benchmark.h>

#include "weathergame/realizer.hpp"
#include "weathergame/recorder.hpp"
#include "weathergame/simulate.hpp"
#include "weathergame/stats.hpp"

using namespace weathergame;

static void BM_RealizeForecast(benchmark::State& state) {
  const auto scenario = generate_scenario(42);
  const auto strategy = state.range(0) ? NlgStrategy::kNatural : NlgStrategy::kWmoBased;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize_forecast(scenario.forecasts()[i++ % 8], strategy));
  }
}
BENCHMARK(BM_RealizeForecast)->Arg(0)->Arg(1);

static void BM_GenerateScenario(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_scenario(seed++));
}
BENCHMARK(BM_GenerateScenario);

static void BM_FullSession(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    MemoryEventStore store;
    auto rec = SessionRecorder::start(store, stepping_clock({}, std::chrono::milliseconds(1)),
                                      new_session("bench", seed, assign_condition(seed)), seed);
    std::mt19937_64 rng(seed++);
    analysis::play_session(rec, analysis::AgentPolicy::literacy(0.5), rng);
    benchmark::DoNotOptimize(rec.session().balance);
  }
}
BENCHMARK(BM_FullSession);

static void BM_Replay(benchmark::State& state) {
  MemoryEventStore store;
  auto rec = SessionRecorder::start(store, stepping_clock({}, std::chrono::milliseconds(1)),
                                    new_session("bench", 3, PresentationCondition::kGraphicsAndWmo), 0);
  std::mt19937_64 rng(3);
  analysis::play_session(rec, analysis::AgentPolicy::oracle(), rng);
  const auto events = store.load_session("bench");
  for (auto _ : state) benchmark::DoNotOptimize(replay_session(events));
}
BENCHMARK(BM_Replay);

static void BM_RankSum(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> payoff(-30, 30);
  std::vector<double> a(static_cast<std::size_t>(state.range(0))), b(a.size());
  for (auto& x : a) x = payoff(rng);
  for (auto& x : b) x = payoff(rng) + 3;
  for (auto _ : state) benchmark::DoNotOptimize(analysis::rank_sum(a, b));
}
BENCHMARK(BM_RankSum)->Arg(8)->Arg(100)->Arg(1000);
BENCHMARK_MAIN();
