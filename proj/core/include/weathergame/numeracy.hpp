#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weathergame/forecast.hpp"

namespace weathergame {

struct NumeracyItem {
  std::string id;
  std::string prompt;
  double answer = 0.0;
  std::optional<std::string> next_if_correct;
  std::optional<std::string> next_if_wrong;
};

// Adaptive risk-literacy test: the first item is fixed and each item's
// correctness selects its successor.
class QuestionBank {
 public:
  // Validates that every referenced id exists and that the item graph is
  // acyclic. Throws ParseError otherwise.
  static QuestionBank from_json(const Json& j);
  static QuestionBank load_file(const std::string& path);
  static const QuestionBank& standard();

  const NumeracyItem& item(std::string_view id) const;
  const std::string& first() const { return first_; }
  int literacy_threshold() const { return literacy_threshold_; }
  const std::vector<NumeracyItem>& items() const { return items_; }

  // Numeric comparison; a trailing '%' and surrounding spaces are ignored.
  static bool is_correct(const NumeracyItem& item, std::string_view given);

 private:
  std::vector<NumeracyItem> items_;
  std::string first_;
  int literacy_threshold_ = 3;
};

struct NumeracyAnswer {
  std::string question_id;
  std::string given_answer;

  friend bool operator==(const NumeracyAnswer&, const NumeracyAnswer&) = default;
};

struct GradedAnswer {
  std::string question_id;
  std::string given_answer;
  bool correct = false;

  friend bool operator==(const GradedAnswer&, const GradedAnswer&) = default;
};

struct NumeracyResult {
  int score = 0;
  bool literate = false;
  std::vector<GradedAnswer> answers;

  friend bool operator==(const NumeracyResult&, const NumeracyResult&) = default;
};

struct NumeracyProgress {
  std::vector<GradedAnswer> graded;
  const NumeracyItem* next = nullptr;  // null once the path is complete
};

// Grades a prefix of the adaptive path. Throws ProtocolError when an answer
// names an item that is not the expected next one.
NumeracyProgress walk_numeracy(const std::vector<NumeracyAnswer>& answers,
                               const QuestionBank& bank);

// Grades a complete path. Incomplete or off-path input is a ProtocolError.
NumeracyResult numeracy_score(const std::vector<NumeracyAnswer>& answers,
                              const QuestionBank& bank);

Json to_json(const NumeracyResult& result);

}  // namespace weathergame
