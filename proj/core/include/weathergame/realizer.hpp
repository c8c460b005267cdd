#pragma once

#include <array>
#include <string>
#include <string_view>

#include "weathergame/forecast.hpp"
#include "weathergame/lexicon.hpp"

namespace weathergame {

enum class NlgStrategy { kWmoBased, kNatural };

std::string_view to_string(NlgStrategy strategy);
NlgStrategy parse_strategy(std::string_view text);

struct ForecastText {
  std::string rainfall_sentence;
  std::string temperature_sentence;
  NlgStrategy strategy = NlgStrategy::kWmoBased;

  friend bool operator==(const ForecastText&, const ForecastText&) = default;
};

// Rain-band groups used by the NATURAL table: bands 0-1, 2-3, 4-5, 6-8.
inline constexpr int kRainGroups = 4;
int rain_group_for_band(int ordinal);

// Forecaster-register rainfall phrases keyed by (sky, rain group).
class NaturalRules {
 public:
  // Tab-separated records "SKY group phrase"; all 16 cells are required.
  static NaturalRules parse(std::string_view text);
  static NaturalRules load_file(const std::string& path);
  static const NaturalRules& standard();

  const std::string& phrase(SkyCondition sky, int group) const;

 private:
  std::array<std::array<std::string, kRainGroups>, 4> cells_;
};

// Template-based surface realization. Holds references to its tables; both
// must outlive the realizer.
class Realizer {
 public:
  Realizer() : Realizer(Lexicon::wmo(), NaturalRules::standard()) {}
  Realizer(const Lexicon& lexicon, const NaturalRules& rules) : lexicon_(lexicon), rules_(rules) {}

  std::string rainfall(SkyCondition sky, Probability p, NlgStrategy strategy) const;
  std::string temperature(const TemperatureDistribution& t, NlgStrategy strategy) const;
  ForecastText forecast(const LocationForecast& f, NlgStrategy strategy) const;

 private:
  const Lexicon& lexicon_;
  const NaturalRules& rules_;
};

std::string_view sky_phrase(SkyCondition sky);

std::string realize_rainfall(SkyCondition sky, Probability p, NlgStrategy strategy);
std::string realize_temperature(const TemperatureDistribution& t, NlgStrategy strategy);
ForecastText realize_forecast(const LocationForecast& f, NlgStrategy strategy);

}  // namespace weathergame
