#pragma once

// Test-only reference implementations. Nothing here may call into the
// library code paths they are used to check.

#include <string>

namespace weathergame::testing {

// Likelihood table transcribed by hand as an if-chain over percent values.
inline std::string wmo_phrase_oracle(int percent) {
  const double p = percent / 100.0;
  if (p > 0.99) return "extremely likely";
  if (p >= 0.90 && p <= 0.99) return "very likely";
  if (p >= 0.70 && p <= 0.89) return "likely";
  if (p >= 0.55 && p <= 0.69) return "probable - more likely than not";
  if (p >= 0.45 && p <= 0.54) return "equally likely as not";
  if (p >= 0.30 && p <= 0.44) return "possible - less likely than not";
  if (p >= 0.10 && p <= 0.29) return "unlikely";
  if (p >= 0.01 && p <= 0.09) return "very unlikely";
  if (p < 0.01) return "extremely unlikely";
  return "";
}

// Expected payoff enumerated over the two outcomes, scaled by 100 so that
// probabilities in hundredths stay integral.
inline long long expected_payoff_x100_brute(int rain_hundredths, int confidence) {
  const long long win = 30LL * confidence / 10;
  long long total = 0;
  for (int rain = 0; rain <= 1; ++rain) {
    const long long weight = rain ? rain_hundredths : 100 - rain_hundredths;
    total += weight * (rain ? -win : win);
  }
  return total;
}

// 30 * (c / 10) * (1 - 2p), scaled by 100.
inline long long expected_payoff_x100_analytic(int rain_hundredths, int confidence) {
  return 3LL * confidence * (100 - 2 * rain_hundredths);
}

}  // namespace weathergame::testing
