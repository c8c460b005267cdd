#include "weathergame/lexicon.hpp"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "weathergame/errors.hpp"

namespace weathergame {
namespace {

Probability P(int h) { return Probability::from_hundredths(h); }

TEST(LexiconTest, PhrasesMatchTableVerbatim) {
  const char* expected[] = {
      "extremely unlikely",
      "very unlikely",
      "unlikely",
      "possible - less likely than not",
      "equally likely as not",
      "probable - more likely than not",
      "likely",
      "very likely",
      "extremely likely",
  };
  const auto& bands = Lexicon::wmo().bands();
  for (int i = 0; i < kBandCount; ++i) {
    EXPECT_EQ(bands[i].ordinal, i);
    EXPECT_EQ(bands[i].phrase, expected[i]);
  }
}

TEST(LexiconTest, BandExamples) {
  EXPECT_EQ(band_for(P(30)).phrase, "possible - less likely than not");
  EXPECT_EQ(band_for(P(50)).phrase, "equally likely as not");
  EXPECT_EQ(band_for(P(0)).phrase, "extremely unlikely");
  EXPECT_EQ(band_for(P(100)).phrase, "extremely likely");
}

TEST(LexiconTest, AgreesWithIfChainOracleOnWholeGrid) {
  for (int h = 0; h <= 100; ++h) {
    EXPECT_EQ(band_for(P(h)).phrase, testing::wmo_phrase_oracle(h)) << "p=" << h;
  }
}

TEST(LexiconTest, BandsTileTheGrid) {
  int total = 0;
  for (const auto& band : Lexicon::wmo().bands()) {
    total += band.upper.hundredths() - band.lower.hundredths() + 1;
  }
  EXPECT_EQ(total, 101);
}

TEST(LexiconTest, MonotoneAndRoundTrip) {
  int previous = 0;
  for (int h = 0; h <= 100; ++h) {
    const auto& band = band_for(P(h));
    EXPECT_GE(band.ordinal, previous);
    previous = band.ordinal;
    const auto [lo, hi] = interval_for(band.phrase);
    EXPECT_LE(lo, P(h));
    EXPECT_LE(P(h), hi);
  }
}

TEST(LexiconTest, IntervalForExamples) {
  EXPECT_EQ(interval_for("unlikely"), std::make_pair(P(10), P(29)));
  EXPECT_EQ(interval_for("extremely likely"), std::make_pair(P(100), P(100)));
  EXPECT_THROW(interval_for("rather likely"), LookupError);
}

TEST(LexiconTest, ShippedDataFileIsTheCompiledTable) {
  std::ifstream in(std::string(WG_DATA_DIR) + "/wmo_lexicon.tsv");
  ASSERT_TRUE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  const Lexicon from_file = Lexicon::parse(buf.str());
  for (int i = 0; i < kBandCount; ++i) {
    EXPECT_EQ(from_file.bands()[i].phrase, Lexicon::wmo().bands()[i].phrase);
    EXPECT_EQ(from_file.bands()[i].lower, Lexicon::wmo().bands()[i].lower);
  }
}

TEST(LexiconTest, RejectsTablesThatDoNotTile) {
  const std::string gap =
      "0\t0.00\t0.00\ta\n1\t0.01\t0.09\tb\n2\t0.11\t0.29\tc\n3\t0.30\t0.44\td\n"
      "4\t0.45\t0.54\te\n5\t0.55\t0.69\tf\n6\t0.70\t0.89\tg\n7\t0.90\t0.99\th\n8\t1.00\t1.00\ti\n";
  try {
    Lexicon::parse(gap);
    FAIL() << "gap accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(Lexicon::parse("0\t0.00\t1.00\tall\n"), ParseError);
  EXPECT_THROW(Lexicon::parse("0\t0.00\tx\tbad\n"), ParseError);
}

}  // namespace
}  // namespace weathergame
