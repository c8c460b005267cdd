#pragma once

#include <span>
#include <string_view>

namespace weathergame::analysis {

enum class TestMethod { kWelchT, kRankSum };

std::string_view to_string(TestMethod method);
// "welch" / "ranksum" (also the upper-case enum names).
TestMethod parse_method(std::string_view text);

struct TestResult {
  TestMethod method = TestMethod::kRankSum;
  double statistic = 0.0;  // Welch t, or Mann-Whitney U of the first sample
  double p_value = 1.0;    // two-sided
  bool exact = false;      // rank-sum only: exact null distribution used
  bool degenerate = false; // no variability to test against
};

// Welch's unequal-variance t test, two-sided.
TestResult welch_t(std::span<const double> a, std::span<const double> b);

// Mann-Whitney U, two-sided. Uses the exact null distribution when there
// are no ties and min(n_a, n_b) <= 8; otherwise the normal approximation
// with tie correction and continuity correction.
TestResult rank_sum(std::span<const double> a, std::span<const double> b);

// Throws DomainError if either sample has fewer than 2 values.
TestResult significance(std::span<const double> a, std::span<const double> b, TestMethod method);

double mean(std::span<const double> xs);
// Sample variance (n - 1 denominator).
double variance(std::span<const double> xs);

}  // namespace weathergame::analysis
