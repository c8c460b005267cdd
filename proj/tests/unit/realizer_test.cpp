#include "weathergame/realizer.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "weathergame/errors.hpp"

namespace weathergame {
namespace {

Probability P(int h) { return Probability::from_hundredths(h); }

constexpr SkyCondition kSkies[] = {SkyCondition::kSunny, SkyCondition::kSunnyIntervals,
                                   SkyCondition::kCloudy, SkyCondition::kOvercast};

TEST(RealizerTest, GoldenSentences) {
  EXPECT_EQ(realize_rainfall(SkyCondition::kSunnyIntervals, P(30), NlgStrategy::kWmoBased),
            "Sunny intervals with rain being possible - less likely than not");
  EXPECT_EQ(realize_rainfall(SkyCondition::kSunnyIntervals, P(30), NlgStrategy::kNatural),
            "Mainly dry with sunny spells");
}

TEST(RealizerTest, WmoComposition) {
  EXPECT_EQ(realize_rainfall(SkyCondition::kOvercast, P(92), NlgStrategy::kWmoBased),
            "Overcast with rain being very likely");
  EXPECT_EQ(realize_rainfall(SkyCondition::kCloudy, P(50), NlgStrategy::kWmoBased),
            "Cloudy with rain or no rain equally likely");
  EXPECT_EQ(realize_rainfall(SkyCondition::kSunny, P(0), NlgStrategy::kWmoBased),
            "Sunny with no rain expected");
  EXPECT_EQ(realize_rainfall(SkyCondition::kOvercast, P(100), NlgStrategy::kWmoBased),
            "Overcast with rain expected");
}

TEST(RealizerTest, TemperatureTemplates) {
  EXPECT_EQ(realize_temperature(TemperatureDistribution::make(8, 12, 16), NlgStrategy::kWmoBased),
            "Temperatures around 12\xC2\xB0" "C, very likely between 8\xC2\xB0" "C and 16\xC2\xB0" "C");
  EXPECT_EQ(realize_temperature(TemperatureDistribution::make(18, 22, 26), NlgStrategy::kNatural),
            "Warm with highs of 26\xC2\xB0" "C");
  EXPECT_EQ(realize_temperature(TemperatureDistribution::make(15, 15, 15), NlgStrategy::kWmoBased),
            "Temperatures around 15\xC2\xB0" "C, very likely between 15\xC2\xB0" "C and 15\xC2\xB0" "C");
  EXPECT_EQ(realize_temperature(TemperatureDistribution::make(2, 5, 9), NlgStrategy::kNatural),
            "Rather cold with highs of 9\xC2\xB0" "C");
  EXPECT_EQ(realize_temperature(TemperatureDistribution::make(8, 10, 13), NlgStrategy::kNatural),
            "Mild with highs of 13\xC2\xB0" "C");
  EXPECT_EQ(realize_temperature(TemperatureDistribution::make(-6, -3, 1), NlgStrategy::kNatural),
            "Rather cold with highs of 1\xC2\xB0" "C");
}

TEST(RealizerTest, ForecastComposesBothSentences) {
  LocationForecast f;
  f.sky = SkyCondition::kSunnyIntervals;
  f.rain_prob = P(30);
  f.temperature = TemperatureDistribution::make(18, 22, 26);
  const auto text = realize_forecast(f, NlgStrategy::kNatural);
  EXPECT_EQ(text.rainfall_sentence, "Mainly dry with sunny spells");
  EXPECT_EQ(text.temperature_sentence, "Warm with highs of 26\xC2\xB0" "C");
  EXPECT_EQ(text.strategy, NlgStrategy::kNatural);
  EXPECT_EQ(realize_forecast(f, NlgStrategy::kNatural), text);
}

TEST(RealizerTest, TotalOverGridAndEmbedsLexiconPhrase) {
  for (auto sky : kSkies) {
    for (int h = 0; h <= 100; ++h) {
      for (auto strategy : {NlgStrategy::kWmoBased, NlgStrategy::kNatural}) {
        const auto s = realize_rainfall(sky, P(h), strategy);
        ASSERT_FALSE(s.empty());
        EXPECT_TRUE(std::isupper(static_cast<unsigned char>(s[0])));
        EXPECT_FALSE(std::isspace(static_cast<unsigned char>(s.back())));
      }
      const int band = band_for(P(h)).ordinal;
      const auto wmo = realize_rainfall(sky, P(h), NlgStrategy::kWmoBased);
      if (band != 0 && band != 4 && band != 8) {
        const std::string suffix = " with rain being " + testing::wmo_phrase_oracle(h);
        ASSERT_GE(wmo.size(), suffix.size());
        EXPECT_EQ(wmo.substr(wmo.size() - suffix.size()), suffix) << wmo;
      }
    }
  }
}

TEST(RealizerTest, EmbeddedPhraseIsFaithfulToProbability) {
  const std::string marker = " with rain being ";
  for (auto sky : kSkies) {
    for (int h = 0; h <= 100; ++h) {
      const auto s = realize_rainfall(sky, P(h), NlgStrategy::kWmoBased);
      const auto at = s.find(marker);
      if (at == std::string::npos) {
        // Categorical and equal-odds forms.
        if (s.ends_with("with no rain expected")) EXPECT_EQ(h, 0);
        else if (s.ends_with("with rain expected")) EXPECT_EQ(h, 100);
        else EXPECT_TRUE(s.ends_with("rain or no rain equally likely") && h >= 45 && h <= 54) << s;
        continue;
      }
      const auto [lo, hi] = interval_for(s.substr(at + marker.size()));
      EXPECT_LE(lo, P(h));
      EXPECT_LE(P(h), hi);
    }
  }
}

TEST(NaturalRulesTest, TableCanBeSwappedFromFile) {
  const std::string path = ::testing::TempDir() + "/natural_rules_alt.tsv";
  {
    std::ofstream out(path);
    for (auto sky : {"SUNNY", "SUNNY_INTERVALS", "CLOUDY", "OVERCAST"}) {
      for (int g = 0; g < 4; ++g) out << sky << '\t' << g << "\tphrase " << sky << ' ' << g << "  \n";
    }
  }
  const auto rules = NaturalRules::load_file(path);
  const Realizer realizer(Lexicon::wmo(), rules);
  EXPECT_EQ(realizer.rainfall(SkyCondition::kCloudy, P(60), NlgStrategy::kNatural), "Phrase CLOUDY 2");
  std::remove(path.c_str());
}

TEST(NaturalRulesTest, IncompleteTableRejected) {
  EXPECT_THROW(NaturalRules::parse("SUNNY\t0\tDry\n"), ParseError);
  EXPECT_THROW(NaturalRules::parse("FOGGY\t0\tDry\n"), ParseError);
  EXPECT_THROW(NaturalRules::load_file("/nonexistent/rules.tsv"), NotFoundError);
}

TEST(NaturalRulesTest, GroupBoundaries) {
  EXPECT_EQ(rain_group_for_band(0), 0);
  EXPECT_EQ(rain_group_for_band(1), 0);
  EXPECT_EQ(rain_group_for_band(2), 1);
  EXPECT_EQ(rain_group_for_band(3), 1);
  EXPECT_EQ(rain_group_for_band(4), 2);
  EXPECT_EQ(rain_group_for_band(5), 2);
  EXPECT_EQ(rain_group_for_band(6), 3);
  EXPECT_EQ(rain_group_for_band(8), 3);
}

}  // namespace
}  // namespace weathergame
