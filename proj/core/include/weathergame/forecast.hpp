#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "weathergame/probability.hpp"

namespace weathergame {

using Json = nlohmann::ordered_json;

inline constexpr int kWeeks = 4;
inline constexpr int kLocations = 2;

// Sales at a location with no chance of rain and a warm median temperature.
inline constexpr double kMaxSales = 30.0;
// generate_scenario keeps the two locations at least this far apart per week.
inline constexpr double kMinSalesGap = 5.0;

enum class SkyCondition { kSunny, kSunnyIntervals, kCloudy, kOvercast };

enum class LocationId { kA, kB };

std::string_view to_string(SkyCondition sky);
std::string_view to_string(LocationId location);
// Accepts the canonical upper-case tag or its lower-case form.
SkyCondition parse_sky(std::string_view text);
LocationId parse_location(std::string_view text);

// Temperature uncertainty as 10th/50th/90th percentiles, whole degrees C.
struct TemperatureDistribution {
  int q10 = 0;
  int q50 = 0;
  int q90 = 0;

  // Throws DomainError unless q10 <= q50 <= q90, all within [-30, 50].
  static TemperatureDistribution make(int q10, int q50, int q90);

  friend bool operator==(const TemperatureDistribution&, const TemperatureDistribution&) = default;
};

struct LocationForecast {
  LocationId location = LocationId::kA;
  int week = 1;
  Probability rain_prob;
  SkyCondition sky = SkyCondition::kSunny;
  TemperatureDistribution temperature;

  friend bool operator==(const LocationForecast&, const LocationForecast&) = default;
};

// Four weeks by two locations, stored week-major: index (week-1)*2 + location.
class Scenario {
 public:
  Scenario() = default;
  // Validates that every (week, location) pair appears exactly once and
  // stores the forecasts in canonical order.
  Scenario(std::string scenario_id, std::uint64_t seed,
           const std::array<LocationForecast, kWeeks * kLocations>& forecasts);

  const std::string& scenario_id() const { return scenario_id_; }
  std::uint64_t seed() const { return seed_; }
  const std::array<LocationForecast, kWeeks * kLocations>& forecasts() const { return forecasts_; }

  // Throws DomainError for a week outside 1..4.
  const LocationForecast& at(int week, LocationId location) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  std::string scenario_id_;
  std::uint64_t seed_ = 0;
  std::array<LocationForecast, kWeeks * kLocations> forecasts_{};
};

// Deterministic in seed. Each week's pair is resampled until the expected
// sales differ by at least kMinSalesGap.
Scenario generate_scenario(std::uint64_t seed);

// kMaxSales * (1 - rain_prob) * clamp((q50 - 10) / 20, 0, 1).
double expected_sales(const LocationForecast& forecast);

// The location with strictly greater expected sales; ties go to A.
LocationId best_location(const Scenario& scenario, int week);

void check_week(int week);

// Canonical JSON: fixed field order, probabilities as two-decimal strings,
// seed as a decimal string.
Json to_json(const LocationForecast& forecast);
Json to_json(const Scenario& scenario);
LocationForecast location_forecast_from_json(const Json& j);
Scenario scenario_from_json(const Json& j);

}  // namespace weathergame
