// weathergame: simulate players, analyze event logs, serve the /v1 API.

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <pthread.h>

#include <CLI11.hpp>

#include "weathergame/analysis.hpp"
#include "weathergame/http_server.hpp"
#include "weathergame/simulate.hpp"
#include "weathergame/stats.hpp"

using namespace weathergame;
namespace wa = weathergame::analysis;

namespace {

struct SimulateArgs {
  std::string policy = "random";
  std::size_t sessions = 100;
  std::string condition = "round-robin";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out = "-";
};

struct AnalyzeArgs {
  std::string in = "-";
  std::string group_by;
  std::vector<std::string> compare;
  std::string method = "both";
  bool json = false;
};

struct ServeArgs {
  std::string addr = "127.0.0.1:8080";
  std::string store;
  std::uint64_t seed = 0;
  std::string admin_token;
  std::string static_dir;
};

struct RealizeArgs {
  std::string sky = "SUNNY_INTERVALS";
  std::string p = "0.30";
  std::string strategy = "WMO";
  std::vector<int> temperature;
};

int run_simulate(const SimulateArgs& a) {
  wa::SimulationConfig config;
  config.policy = wa::AgentPolicy::parse(a.policy);
  config.sessions = a.sessions;
  if (a.condition != "round-robin") config.condition = parse_condition(a.condition);
  config.master_seed = a.seed;
  config.threads = a.threads;
  const auto result = wa::simulate(config);
  if (a.out == "-") {
    std::cout << result.events_jsonl;
  } else {
    std::ofstream out(a.out, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    out << result.events_jsonl;
  }
  double total = 0;
  for (const auto& s : result.sessions) total += s.balance;
  std::fprintf(stderr, "%zu sessions (%s), mean gain %.2f\n", result.sessions.size(),
               config.policy.to_string().c_str(), total / static_cast<double>(result.sessions.size()));
  return 0;
}

struct Comparison {
  std::string a, b;
  std::vector<double> xa, xb;
  std::vector<wa::TestResult> tests;
};

Json comparison_json(const Comparison& c) {
  Json j;
  j["baseline"] = c.a;
  j["treatment"] = c.b;
  j["n_baseline"] = c.xa.size();
  j["n_treatment"] = c.xb.size();
  if (!c.xa.empty() && !c.xb.empty()) {
    const double ma = wa::mean(c.xa), mb = wa::mean(c.xb);
    j["mean_baseline"] = ma;
    j["mean_treatment"] = mb;
    j["effect"] = wa::effect(ma, mb);
    j["percent_increase"] = ma > 0 ? Json(wa::percent_increase(ma, mb)) : Json();
  }
  Json tests = Json::array();
  for (const auto& t : c.tests) tests.push_back(wa::to_json(t));
  j["tests"] = std::move(tests);
  return j;
}

int run_analyze(const AnalyzeArgs& a) {
  std::vector<wa::SessionSummary> summaries;
  if (a.in == "-") {
    summaries = wa::read_summaries(std::cin);
  } else {
    std::ifstream in(a.in, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + a.in);
    summaries = wa::read_summaries(in);
  }
  const std::optional<std::string> group_by = a.group_by.empty() ? std::nullopt : std::optional(a.group_by);
  const auto rows = wa::aggregate(summaries, group_by);

  std::vector<wa::TestMethod> methods;
  if (a.method == "both") {
    methods = {wa::TestMethod::kWelchT, wa::TestMethod::kRankSum};
  } else {
    methods = {wa::parse_method(a.method)};
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (a.compare.size() == 2) {
    pairs.emplace_back(a.compare[0], a.compare[1]);
  } else {
    pairs = {{std::string(wa::kGraphicsOnlyGroup), std::string(wa::kMultimodalGroup)},
             {std::string(wa::kGraphicsOnlyGroup), std::string(wa::kNlgOnlyGroup)}};
  }
  std::vector<Comparison> comparisons;
  for (const auto& [ga, gb] : pairs) {
    Comparison c{ga, gb, wa::gains(summaries, ga), wa::gains(summaries, gb), {}};
    if (c.xa.size() >= 2 && c.xb.size() >= 2) {
      for (auto m : methods) c.tests.push_back(wa::significance(c.xa, c.xb, m));
    }
    comparisons.push_back(std::move(c));
  }

  if (a.json) {
    Json j;
    j["sessions"] = summaries.size();
    j["group_by"] = group_by ? Json(*group_by) : Json();
    Json table = Json::array();
    for (const auto& r : rows) table.push_back(wa::to_json(r));
    j["rows"] = std::move(table);
    Json cmp = Json::array();
    for (const auto& c : comparisons) cmp.push_back(comparison_json(c));
    j["comparisons"] = std::move(cmp);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::printf("%zu sessions\n\n", summaries.size());
  std::printf("%-20s %-22s %6s %10s %12s\n", group_by ? group_by->c_str() : "group", "condition", "n", "mean gain",
              "confidence%");
  for (const auto& r : rows) {
    std::printf("%-20s %-22s %6zu %10.2f %12.2f\n", r.group_value.c_str(),
                (r.pooled ? r.label : "  " + r.label).c_str(), r.n, r.mean_gain, r.mean_confidence_pct);
  }
  for (const auto& c : comparisons) {
    std::printf("\n%s -> %s\n", c.a.c_str(), c.b.c_str());
    if (c.xa.empty() || c.xb.empty()) {
      std::printf("  not enough completed sessions (n = %zu, %zu)\n", c.xa.size(), c.xb.size());
      continue;
    }
    const double ma = wa::mean(c.xa), mb = wa::mean(c.xb);
    std::printf("  effect           %+.2f\n", wa::effect(ma, mb));
    if (ma > 0) {
      std::printf("  percent increase %+.1f%%\n", wa::percent_increase(ma, mb));
    } else {
      std::printf("  percent increase n/a (baseline mean %.2f)\n", ma);
    }
    for (const auto& t : c.tests) {
      std::printf("  %-8s statistic %10.4f  p %.4g%s%s\n", std::string(wa::to_string(t.method)).c_str(),
                  t.statistic, t.p_value, t.exact ? "  (exact)" : "", t.degenerate ? "  (degenerate)" : "");
    }
  }
  return 0;
}

int run_serve(ServeArgs a) {
  const auto colon = a.addr.rfind(':');
  if (colon == std::string::npos) throw std::invalid_argument("--addr must be host:port");
  const std::string host = a.addr.substr(0, colon);
  const int port = std::stoi(a.addr.substr(colon + 1));
  if (a.admin_token.empty()) {
    if (const char* env = std::getenv("WEATHERGAME_ADMIN_TOKEN")) a.admin_token = env;
  }

  std::unique_ptr<EventStore> store;
  if (a.store.empty()) {
    std::fprintf(stderr, "warning: no --store given, events are kept in memory only\n");
    store = std::make_unique<MemoryEventStore>();
  } else {
    store = std::make_unique<FileEventStore>(a.store);
  }
  api::ServiceConfig config;
  config.master_seed = a.seed;
  if (!a.admin_token.empty()) config.admin_token = a.admin_token;
  api::GameService service(*store, config);
  api::HttpServer server(service);
  if (!a.static_dir.empty() && !server.mount_static(a.static_dir)) {
    throw std::runtime_error("static directory not found: " + a.static_dir);
  }

  // Handle SIGINT/SIGTERM synchronously so stop() runs outside a handler.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  if (!server.bind(host, port)) throw std::runtime_error("cannot bind " + a.addr);
  std::thread listener([&] { server.listen_after_bind(); });
  std::fprintf(stderr, "listening on %s (%zu sessions restored%s)\n", a.addr.c_str(), service.session_count(),
               config.admin_token ? "" : ", export disabled");
  int sig = 0;
  sigwait(&signals, &sig);
  server.stop();
  listener.join();
  return 0;
}

int run_realize(const RealizeArgs& a) {
  const auto sky = parse_sky(a.sky);
  const auto p = Probability::parse(a.p);
  const auto strategy = parse_strategy(a.strategy);
  std::cout << realize_rainfall(sky, p, strategy) << "\n";
  if (a.temperature.size() == 3) {
    const auto t = TemperatureDistribution::make(a.temperature[0], a.temperature[1], a.temperature[2]);
    std::cout << realize_temperature(t, strategy) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weather decision game: simulation, analysis and the /v1 API"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Play sessions with scripted agents and write the event log");
  simulate->add_option("--policy", sim.policy, "oracle | random | literacy:<q>")->capture_default_str();
  simulate->add_option("--sessions", sim.sessions, "Number of sessions")->capture_default_str()->check(CLI::PositiveNumber);
  simulate->add_option("--condition", sim.condition, "Presentation condition, or round-robin")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
  simulate->add_option("--threads", sim.threads, "Worker threads")->capture_default_str();
  simulate->add_option("--out", sim.out, "Output JSON-lines file, - for stdout")->capture_default_str();

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Aggregate an event log per condition and test differences");
  analyze->add_option("--in", an.in, "JSON-lines event log, - for stdin")->capture_default_str();
  analyze->add_option("--group-by", an.group_by, "gender | education | native_speaker | risk_experience | "
                                                 "weather_familiarity | literate");
  analyze->add_option("--compare", an.compare, "Baseline and treatment group, e.g. GRAPHICS_ONLY MULTIMODAL")
      ->expected(2);
  analyze->add_option("--method", an.method, "welch | ranksum | both")->capture_default_str();
  analyze->add_flag("--json", an.json, "Machine-readable output");

  ServeArgs sv;
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--addr", sv.addr, "host:port")->capture_default_str();
  serve->add_option("--store", sv.store, "Event log file (created if missing)");
  serve->add_option("--seed", sv.seed, "Master seed for session seeds")->capture_default_str();
  serve->add_option("--admin-token", sv.admin_token, "Token for /v1/export (default: $WEATHERGAME_ADMIN_TOKEN)");
  serve->add_option("--static", sv.static_dir, "Directory of static files to serve under /");

  RealizeArgs re;
  auto* realize = app.add_subcommand("realize", "Print the generated forecast text for one location");
  realize->add_option("--sky", re.sky, "SUNNY | SUNNY_INTERVALS | CLOUDY | OVERCAST")->capture_default_str();
  realize->add_option("--p", re.p, "Rain probability on the 0.01 grid")->capture_default_str();
  realize->add_option("--strategy", re.strategy, "WMO | NATURAL")->capture_default_str();
  realize->add_option("--temperature", re.temperature, "q10 q50 q90")->expected(3);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return run_simulate(sim);
    if (*analyze) return run_analyze(an);
    if (*serve) return run_serve(sv);
    if (*realize) return run_realize(re);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
