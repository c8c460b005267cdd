#include "weathergame/probability.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "weathergame/errors.hpp"

namespace weathergame {

Probability Probability::from_hundredths(int hundredths) {
  if (hundredths < 0 || hundredths > 100) {
    throw DomainError("probability out of range: " + std::to_string(hundredths) + "/100");
  }
  return Probability(hundredths);
}

Probability Probability::parse(const std::string& text) {
  char* end = nullptr;
  const double raw = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw DomainError("not a probability: '" + text + "'");
  }
  Probability p = quantize(raw);
  if (std::fabs(p.value() - raw) > 1e-9) {
    throw DomainError("probability not on the hundredth grid: '" + text + "'");
  }
  return p;
}

std::string Probability::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%d.%02d", hundredths_ / 100, hundredths_ % 100);
  return buf;
}

Probability quantize(double raw) {
  if (!std::isfinite(raw) || raw < 0.0 || raw > 1.0) {
    throw DomainError("probability must lie in [0, 1]");
  }
  // The epsilon absorbs binary representation error so that decimal ties
  // such as 0.095 round up as written.
  const int h = static_cast<int>(std::floor(raw * 100.0 + 0.5 + 1e-9));
  return Probability::from_hundredths(h);
}

}  // namespace weathergame
