#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "weathergame/probability.hpp"

namespace weathergame {

struct LikelihoodBand {
  int ordinal = 0;  // 0 = least likely
  Probability lower;  // inclusive
  Probability upper;  // inclusive
  std::string phrase;

  bool contains(Probability p) const { return lower <= p && p <= upper; }
};

inline constexpr int kBandCount = 9;

// Verbal likelihood scale: nine bands that tile the hundredth grid.
//
// The table is data. parse() checks that the records are contiguous,
// cover 0.00..1.00 exactly once, and are ordered by ordinal.
class Lexicon {
 public:
  // Tab-separated records "ordinal lower upper phrase"; '#' starts a comment.
  // Throws ParseError on malformed text or a table that does not tile.
  static Lexicon parse(std::string_view text);

  // The compiled-in WMO table.
  static const Lexicon& wmo();

  const LikelihoodBand& band_for(Probability p) const;

  // Closed interval of the band whose phrase matches exactly.
  // Throws LookupError for an unknown phrase.
  std::pair<Probability, Probability> interval_for(std::string_view phrase) const;

  const std::array<LikelihoodBand, kBandCount>& bands() const { return bands_; }

 private:
  std::array<LikelihoodBand, kBandCount> bands_;
  std::array<int, 101> band_of_{};  // hundredths -> ordinal
};

inline const LikelihoodBand& band_for(Probability p) { return Lexicon::wmo().band_for(p); }

inline std::pair<Probability, Probability> interval_for(std::string_view phrase) {
  return Lexicon::wmo().interval_for(phrase);
}

}  // namespace weathergame
