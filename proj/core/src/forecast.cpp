#include "weathergame/forecast.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <random>

#include "weathergame/errors.hpp"
#include "weathergame/rng.hpp"

namespace weathergame {
namespace {

constexpr std::size_t index_of(int week, LocationId location) {
  return static_cast<std::size_t>((week - 1) * kLocations + static_cast<int>(location));
}

std::string upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

SkyCondition draw_sky(std::mt19937_64& rng, int rain_hundredths) {
  const bool first = uniform_below(rng, 2) == 0;
  if (rain_hundredths < 20) return first ? SkyCondition::kSunny : SkyCondition::kSunnyIntervals;
  if (rain_hundredths < 50) return first ? SkyCondition::kSunnyIntervals : SkyCondition::kCloudy;
  if (rain_hundredths <= 80) return first ? SkyCondition::kCloudy : SkyCondition::kOvercast;
  return first ? SkyCondition::kOvercast : SkyCondition::kCloudy;
}

LocationForecast draw_forecast(std::mt19937_64& rng, int week, LocationId location) {
  LocationForecast f;
  f.location = location;
  f.week = week;
  f.rain_prob = Probability::from_hundredths(uniform_int(rng, 0, 100));
  f.sky = draw_sky(rng, f.rain_prob.hundredths());
  const int q50 = uniform_int(rng, 8, 30);
  const int below = uniform_int(rng, 2, 6);
  const int above = uniform_int(rng, 2, 6);
  f.temperature = TemperatureDistribution::make(q50 - below, q50, q50 + above);
  return f;
}

}  // namespace

std::string_view to_string(SkyCondition sky) {
  switch (sky) {
    case SkyCondition::kSunny: return "SUNNY";
    case SkyCondition::kSunnyIntervals: return "SUNNY_INTERVALS";
    case SkyCondition::kCloudy: return "CLOUDY";
    case SkyCondition::kOvercast: return "OVERCAST";
  }
  return "?";
}

std::string_view to_string(LocationId location) {
  return location == LocationId::kA ? "A" : "B";
}

SkyCondition parse_sky(std::string_view text) {
  const std::string tag = upper(text);
  for (auto sky : {SkyCondition::kSunny, SkyCondition::kSunnyIntervals, SkyCondition::kCloudy,
                   SkyCondition::kOvercast}) {
    if (tag == to_string(sky)) return sky;
  }
  throw DomainError("unknown sky condition: '" + std::string(text) + "'");
}

LocationId parse_location(std::string_view text) {
  const std::string tag = upper(text);
  if (tag == "A") return LocationId::kA;
  if (tag == "B") return LocationId::kB;
  throw DomainError("unknown location: '" + std::string(text) + "'");
}

TemperatureDistribution TemperatureDistribution::make(int q10, int q50, int q90) {
  if (!(q10 <= q50 && q50 <= q90)) throw DomainError("temperature quantiles out of order");
  if (q10 < -30 || q90 > 50) throw DomainError("temperature outside [-30, 50] C");
  return {q10, q50, q90};
}

Scenario::Scenario(std::string scenario_id, std::uint64_t seed,
                   const std::array<LocationForecast, kWeeks * kLocations>& forecasts)
    : scenario_id_(std::move(scenario_id)), seed_(seed) {
  std::array<bool, kWeeks * kLocations> seen{};
  for (const auto& f : forecasts) {
    check_week(f.week);
    const auto i = index_of(f.week, f.location);
    if (seen[i]) throw DomainError("duplicate forecast for week/location");
    seen[i] = true;
    forecasts_[i] = f;
  }
}

const LocationForecast& Scenario::at(int week, LocationId location) const {
  check_week(week);
  return forecasts_[index_of(week, location)];
}

void check_week(int week) {
  if (week < 1 || week > kWeeks) throw DomainError("week out of range: " + std::to_string(week));
}

Scenario generate_scenario(std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, 0));
  std::array<LocationForecast, kWeeks * kLocations> forecasts;
  for (int week = 1; week <= kWeeks; ++week) {
    for (;;) {
      auto a = draw_forecast(rng, week, LocationId::kA);
      auto b = draw_forecast(rng, week, LocationId::kB);
      if (std::fabs(expected_sales(a) - expected_sales(b)) >= kMinSalesGap) {
        forecasts[index_of(week, LocationId::kA)] = a;
        forecasts[index_of(week, LocationId::kB)] = b;
        break;
      }
    }
  }
  char id[24];
  std::snprintf(id, sizeof id, "scn-%016llx", static_cast<unsigned long long>(seed));
  return Scenario(id, seed, forecasts);
}

double expected_sales(const LocationForecast& forecast) {
  const double temp_factor = std::clamp((forecast.temperature.q50 - 10) / 20.0, 0.0, 1.0);
  return kMaxSales * (1.0 - forecast.rain_prob.value()) * temp_factor;
}

LocationId best_location(const Scenario& scenario, int week) {
  const double a = expected_sales(scenario.at(week, LocationId::kA));
  const double b = expected_sales(scenario.at(week, LocationId::kB));
  return b > a ? LocationId::kB : LocationId::kA;
}

Json to_json(const LocationForecast& f) {
  Json j;
  j["week"] = f.week;
  j["location"] = to_string(f.location);
  j["rain_prob"] = f.rain_prob.to_string();
  j["sky"] = to_string(f.sky);
  j["temperature"] = {{"q10", f.temperature.q10},
                      {"q50", f.temperature.q50},
                      {"q90", f.temperature.q90}};
  return j;
}

Json to_json(const Scenario& s) {
  Json j;
  j["scenario_id"] = s.scenario_id();
  j["seed"] = std::to_string(s.seed());
  Json list = Json::array();
  for (const auto& f : s.forecasts()) list.push_back(to_json(f));
  j["forecasts"] = std::move(list);
  return j;
}

LocationForecast location_forecast_from_json(const Json& j) {
  LocationForecast f;
  f.week = j.at("week").get<int>();
  f.location = parse_location(j.at("location").get<std::string>());
  f.rain_prob = Probability::parse(j.at("rain_prob").get<std::string>());
  f.sky = parse_sky(j.at("sky").get<std::string>());
  const auto& t = j.at("temperature");
  f.temperature = TemperatureDistribution::make(t.at("q10").get<int>(), t.at("q50").get<int>(),
                                                t.at("q90").get<int>());
  return f;
}

Scenario scenario_from_json(const Json& j) {
  const auto& list = j.at("forecasts");
  if (!list.is_array() || list.size() != kWeeks * kLocations) {
    throw DomainError("scenario needs exactly 8 forecasts");
  }
  std::array<LocationForecast, kWeeks * kLocations> forecasts;
  for (std::size_t i = 0; i < list.size(); ++i) forecasts[i] = location_forecast_from_json(list[i]);
  return Scenario(j.at("scenario_id").get<std::string>(),
                  std::stoull(j.at("seed").get<std::string>()), forecasts);
}

}  // namespace weathergame
