#include "weathergame/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "weathergame/errors.hpp"

namespace weathergame::analysis {
namespace {

constexpr std::size_t kExactRankSumLimit = 8;

// P(U <= u) under H0. U of the smaller sample equals its rank sum minus
// s(s+1)/2, so count size-s subsets of ranks 1..m+n by rank sum.
double exact_u_cdf(std::size_t m, std::size_t n, long u) {
  const std::size_t s = std::min(m, n);
  const std::size_t total = m + n;
  const std::size_t max_u = m * n;
  // ways[k][w]: subsets of size k with U-offset w = rank sum - k(k+1)/2.
  std::vector<std::vector<double>> ways(s + 1, std::vector<double>(max_u + 1, 0.0));
  ways[0][0] = 1.0;
  for (std::size_t r = 1; r <= total; ++r) {
    for (std::size_t k = std::min(s, r); k >= 1; --k) {
      // Adding rank r as the k-th smallest chosen element shifts the offset by r - k.
      const std::size_t shift = r - k;
      for (std::size_t w = max_u; w + 1 > shift; --w) {
        ways[k][w] += ways[k - 1][w - shift];
        if (w == 0) break;
      }
    }
  }
  double below = 0.0;
  double all = 0.0;
  for (std::size_t w = 0; w <= max_u; ++w) {
    all += ways[s][w];
    if (static_cast<long>(w) <= u) below += ways[s][w];
  }
  return below / all;
}

}  // namespace

std::string_view to_string(TestMethod method) {
  return method == TestMethod::kWelchT ? "welch" : "ranksum";
}

TestMethod parse_method(std::string_view text) {
  if (text == "welch" || text == "WELCH_T") return TestMethod::kWelchT;
  if (text == "ranksum" || text == "RANK_SUM") return TestMethod::kRankSum;
  throw DomainError("unknown test method '" + std::string(text) + "'");
}

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

TestResult welch_t(std::span<const double> a, std::span<const double> b) {
  TestResult r;
  r.method = TestMethod::kWelchT;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = variance(a) / na;
  const double vb = variance(b) / nb;
  const double diff = mean(a) - mean(b);
  if (va + vb == 0.0) {
    r.degenerate = true;
    r.statistic = diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff);
    r.p_value = diff == 0.0 ? 1.0 : 0.0;
    return r;
  }
  r.statistic = diff / std::sqrt(va + vb);
  const double df = (va + vb) * (va + vb) / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  const boost::math::students_t dist(df);
  r.p_value = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.statistic))));
  return r;
}

TestResult rank_sum(std::span<const double> a, std::span<const double> b) {
  TestResult r;
  r.method = TestMethod::kRankSum;
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  const std::size_t total = m + n;

  struct Obs {
    double value;
    bool first;
  };
  std::vector<Obs> pooled;
  pooled.reserve(total);
  for (double x : a) pooled.push_back({x, true});
  for (double x : b) pooled.push_back({x, false});
  std::sort(pooled.begin(), pooled.end(), [](const Obs& l, const Obs& r) { return l.value < r.value; });

  // Midranks; accumulate the tie term sum(t^3 - t).
  double rank_sum_a = 0.0;
  double tie_term = 0.0;
  bool ties = false;
  for (std::size_t i = 0; i < total;) {
    std::size_t j = i;
    while (j < total && pooled[j].value == pooled[i].value) ++j;
    const double t = static_cast<double>(j - i);
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].first) rank_sum_a += midrank;
    }
    if (t > 1) {
      ties = true;
      tie_term += t * t * t - t;
    }
    i = j;
  }

  const double dm = static_cast<double>(m);
  const double dn = static_cast<double>(n);
  const double u = rank_sum_a - dm * (dm + 1.0) / 2.0;
  r.statistic = u;
  const double mu = dm * dn / 2.0;

  if (!ties && std::min(m, n) <= kExactRankSumLimit) {
    r.exact = true;
    const double u_big = std::max(u, dm * dn - u);
    // P(U >= u_big) = P(U <= mn - u_big) by symmetry.
    const double tail = exact_u_cdf(m, n, static_cast<long>(std::llround(dm * dn - u_big)));
    r.p_value = std::min(1.0, 2.0 * tail);
    return r;
  }

  const double nn = dm + dn;
  const double var = dm * dn / 12.0 * ((nn + 1.0) - tie_term / (nn * (nn - 1.0)));
  if (var <= 0.0) {
    r.degenerate = true;
    r.p_value = 1.0;
    return r;
  }
  const double u_big = std::max(u, dm * dn - u);
  const double z = (u_big - mu - 0.5) / std::sqrt(var);
  const boost::math::normal_distribution<double> normal;
  r.p_value = std::clamp(2.0 * boost::math::cdf(boost::math::complement(normal, z)), 0.0, 1.0);
  return r;
}

TestResult significance(std::span<const double> a, std::span<const double> b, TestMethod method) {
  if (a.size() < 2 || b.size() < 2) throw DomainError("each sample needs at least 2 values");
  TestResult r = method == TestMethod::kWelchT ? welch_t(a, b) : rank_sum(a, b);
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa == sb) {
    r.degenerate = true;
    r.p_value = 1.0;
  }
  return r;
}

}  // namespace weathergame::analysis
