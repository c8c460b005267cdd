#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace weathergame {

// A probability on the hundredth grid {0.00, 0.01, ..., 1.00}.
//
// Stored as an integer count of hundredths so the quantization invariant
// holds by construction and comparisons are exact.
class Probability {
 public:
  constexpr Probability() = default;

  // Throws DomainError unless 0 <= hundredths <= 100.
  static Probability from_hundredths(int hundredths);

  // Parses a decimal such as "0.3" or "0.30". The value must already lie on
  // the grid; use quantize() for arbitrary reals.
  static Probability parse(const std::string& text);

  constexpr int hundredths() const noexcept { return hundredths_; }
  constexpr double value() const noexcept { return hundredths_ / 100.0; }
  constexpr int percent() const noexcept { return hundredths_; }

  // Two-decimal form, e.g. "0.30".
  std::string to_string() const;

  friend constexpr auto operator<=>(Probability, Probability) = default;

 private:
  constexpr explicit Probability(int hundredths) : hundredths_(hundredths) {}

  int hundredths_ = 0;
};

// Round-half-up onto the hundredth grid. Throws DomainError if raw is
// outside [0, 1] or not finite.
Probability quantize(double raw);

}  // namespace weathergame
