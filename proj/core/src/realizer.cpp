#include "weathergame/realizer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "weathergame/embedded_data.hpp"
#include "weathergame/errors.hpp"

namespace weathergame {
namespace {

constexpr std::string_view kDegrees = "\xC2\xB0" "C";

// Reconstructed wording for the temperature spread; the q10..q90 interval
// is an 80% central range.
constexpr std::string_view kWmoTemperatureRange = "very likely between";

constexpr int kEqualOdds = 4;
constexpr int kLowestBand = 0;
constexpr int kHighestBand = 8;

std::string degrees(int t) { return std::to_string(t) + std::string(kDegrees); }

std::string normalize(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

}  // namespace

std::string_view to_string(NlgStrategy strategy) {
  return strategy == NlgStrategy::kWmoBased ? "WMO_BASED" : "NATURAL";
}

NlgStrategy parse_strategy(std::string_view text) {
  std::string tag(text);
  std::transform(tag.begin(), tag.end(), tag.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (tag == "WMO_BASED" || tag == "WMO") return NlgStrategy::kWmoBased;
  if (tag == "NATURAL") return NlgStrategy::kNatural;
  throw DomainError("unknown NLG strategy: '" + std::string(text) + "'");
}

int rain_group_for_band(int ordinal) {
  if (ordinal <= 1) return 0;
  if (ordinal <= 3) return 1;
  if (ordinal <= 5) return 2;
  return 3;
}

NaturalRules NaturalRules::parse(std::string_view text) {
  NaturalRules rules;
  std::array<std::array<bool, kRainGroups>, 4> seen{};
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw ParseError("expected 3 tab-separated fields", line_no);
    SkyCondition sky;
    int group;
    try {
      sky = parse_sky(line.substr(0, t1));
      group = std::stoi(line.substr(t1 + 1, t2 - t1 - 1));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no);
    }
    if (group < 0 || group >= kRainGroups) throw ParseError("rain group must be 0..3", line_no);
    std::string phrase = line.substr(t2 + 1);
    if (phrase.empty()) throw ParseError("empty phrase", line_no);
    auto s = static_cast<std::size_t>(sky);
    if (seen[s][group]) throw ParseError("duplicate cell", line_no);
    seen[s][group] = true;
    rules.cells_[s][group] = std::move(phrase);
  }
  for (const auto& row : seen) {
    for (bool cell : row) {
      if (!cell) throw ParseError("NATURAL table needs all 16 (sky, group) cells", 0);
    }
  }
  return rules;
}

NaturalRules NaturalRules::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open NATURAL rules file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const NaturalRules& NaturalRules::standard() {
  static const NaturalRules rules = parse(embedded::natural_rules_tsv());
  return rules;
}

const std::string& NaturalRules::phrase(SkyCondition sky, int group) const {
  return cells_.at(static_cast<std::size_t>(sky)).at(static_cast<std::size_t>(group));
}

std::string_view sky_phrase(SkyCondition sky) {
  switch (sky) {
    case SkyCondition::kSunny: return "Sunny";
    case SkyCondition::kSunnyIntervals: return "Sunny intervals";
    case SkyCondition::kCloudy: return "Cloudy";
    case SkyCondition::kOvercast: return "Overcast";
  }
  return "";
}

std::string Realizer::rainfall(SkyCondition sky, Probability p, NlgStrategy strategy) const {
  const LikelihoodBand& band = lexicon_.band_for(p);
  if (strategy == NlgStrategy::kNatural) {
    return normalize(rules_.phrase(sky, rain_group_for_band(band.ordinal)));
  }
  std::string out(sky_phrase(sky));
  switch (band.ordinal) {
    case kLowestBand: out += " with no rain expected"; break;
    case kHighestBand: out += " with rain expected"; break;
    case kEqualOdds: out += " with rain or no rain equally likely"; break;
    default: out += " with rain being " + band.phrase; break;
  }
  return normalize(std::move(out));
}

std::string Realizer::temperature(const TemperatureDistribution& t, NlgStrategy strategy) const {
  if (strategy == NlgStrategy::kWmoBased) {
    return normalize("Temperatures around " + degrees(t.q50) + ", " +
                     std::string(kWmoTemperatureRange) + " " + degrees(t.q10) + " and " +
                     degrees(t.q90));
  }
  std::string feel = t.q50 < 10 ? "Rather cold" : t.q50 < 20 ? "Mild" : "Warm";
  return normalize(feel + " with highs of " + degrees(t.q90));
}

ForecastText Realizer::forecast(const LocationForecast& f, NlgStrategy strategy) const {
  return {rainfall(f.sky, f.rain_prob, strategy), temperature(f.temperature, strategy), strategy};
}

std::string realize_rainfall(SkyCondition sky, Probability p, NlgStrategy strategy) {
  return Realizer().rainfall(sky, p, strategy);
}

std::string realize_temperature(const TemperatureDistribution& t, NlgStrategy strategy) {
  return Realizer().temperature(t, strategy);
}

ForecastText realize_forecast(const LocationForecast& f, NlgStrategy strategy) {
  return Realizer().forecast(f, strategy);
}

}  // namespace weathergame
