#include "weathergame/probability.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "weathergame/errors.hpp"
#include "weathergame/lexicon.hpp"

namespace weathergame {
namespace {

TEST(ProbabilityTest, RangeIsEnforced) {
  EXPECT_THROW(Probability::from_hundredths(-1), DomainError);
  EXPECT_THROW(Probability::from_hundredths(101), DomainError);
  EXPECT_EQ(Probability::from_hundredths(100).value(), 1.0);
}

TEST(ProbabilityTest, TwoDecimalString) {
  EXPECT_EQ(Probability::from_hundredths(0).to_string(), "0.00");
  EXPECT_EQ(Probability::from_hundredths(7).to_string(), "0.07");
  EXPECT_EQ(Probability::from_hundredths(30).to_string(), "0.30");
  EXPECT_EQ(Probability::from_hundredths(100).to_string(), "1.00");
}

TEST(ProbabilityTest, ParseAcceptsGridValuesOnly) {
  EXPECT_EQ(Probability::parse("0.3").hundredths(), 30);
  EXPECT_EQ(Probability::parse("0.30").hundredths(), 30);
  EXPECT_THROW(Probability::parse("0.305"), DomainError);
  EXPECT_THROW(Probability::parse("abc"), DomainError);
  EXPECT_THROW(Probability::parse(""), DomainError);
}

TEST(QuantizeTest, RoundsHalfUp) {
  // 0.095 rounds to 0.10, which the table puts in "unlikely".
  const Probability p = quantize(0.095);
  EXPECT_EQ(p.hundredths(), 10);
  EXPECT_EQ(band_for(p).phrase, "unlikely");
  EXPECT_EQ(quantize(0.5).hundredths(), 50);
  EXPECT_EQ(quantize(0.994).hundredths(), 99);
  EXPECT_EQ(quantize(0.995).hundredths(), 100);
  EXPECT_EQ(quantize(0.004999).hundredths(), 0);
  EXPECT_EQ(quantize(0.005).hundredths(), 1);
}

TEST(QuantizeTest, RejectsOutOfRange) {
  EXPECT_THROW(quantize(1.0000001), DomainError);
  EXPECT_THROW(quantize(-0.0001), DomainError);
  EXPECT_THROW(quantize(std::nan("")), DomainError);
}

TEST(QuantizeTest, EveryGridPointIsAFixedPoint) {
  for (int h = 0; h <= 100; ++h) {
    EXPECT_EQ(quantize(h / 100.0).hundredths(), h) << h;
  }
}

}  // namespace
}  // namespace weathergame
