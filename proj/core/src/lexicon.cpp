#include "weathergame/lexicon.hpp"

#include <sstream>
#include <vector>

#include "weathergame/embedded_data.hpp"
#include "weathergame/errors.hpp"

namespace weathergame {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  int count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 4) throw ParseError("expected 4 tab-separated fields", line_no);
    if (count >= kBandCount) throw ParseError("more than 9 bands", line_no);
    LikelihoodBand band;
    try {
      band.ordinal = std::stoi(fields[0]);
      band.lower = Probability::parse(fields[1]);
      band.upper = Probability::parse(fields[2]);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no);
    }
    band.phrase = fields[3];
    if (band.ordinal != count) throw ParseError("ordinals must run 0..8 in order", line_no);
    if (band.phrase.empty()) throw ParseError("empty phrase", line_no);
    if (band.upper < band.lower) throw ParseError("upper bound below lower bound", line_no);
    const int expected_lower = count == 0 ? 0 : lex.bands_[count - 1].upper.hundredths() + 1;
    if (band.lower.hundredths() != expected_lower) {
      throw ParseError("bands must be contiguous without overlap", line_no);
    }
    for (int h = band.lower.hundredths(); h <= band.upper.hundredths(); ++h) {
      lex.band_of_[h] = band.ordinal;
    }
    lex.bands_[count++] = std::move(band);
  }
  if (count != kBandCount) throw ParseError("expected 9 bands", 0);
  if (lex.bands_.back().upper.hundredths() != 100) throw ParseError("bands must reach 1.00", 0);
  return lex;
}

const Lexicon& Lexicon::wmo() {
  static const Lexicon table = parse(embedded::wmo_lexicon_tsv());
  return table;
}

const LikelihoodBand& Lexicon::band_for(Probability p) const {
  return bands_[band_of_[p.hundredths()]];
}

std::pair<Probability, Probability> Lexicon::interval_for(std::string_view phrase) const {
  for (const auto& band : bands_) {
    if (band.phrase == phrase) return {band.lower, band.upper};
  }
  throw LookupError("unknown likelihood phrase: '" + std::string(phrase) + "'");
}

}  // namespace weathergame
