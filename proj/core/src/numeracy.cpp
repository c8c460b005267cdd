#include "weathergame/numeracy.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "weathergame/embedded_data.hpp"
#include "weathergame/errors.hpp"

namespace weathergame {
namespace {

std::optional<std::string> optional_id(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}

}  // namespace

QuestionBank QuestionBank::from_json(const Json& j) {
  QuestionBank bank;
  try {
    bank.first_ = j.at("first").get<std::string>();
    bank.literacy_threshold_ = j.value("literacy_threshold", 3);
    for (const auto& it : j.at("items")) {
      NumeracyItem item;
      item.id = it.at("id").get<std::string>();
      item.prompt = it.at("prompt").get<std::string>();
      item.answer = it.at("answer").get<double>();
      item.next_if_correct = optional_id(it, "next_if_correct");
      item.next_if_wrong = optional_id(it, "next_if_wrong");
      bank.items_.push_back(std::move(item));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("question bank: ") + e.what(), 0);
  }

  std::set<std::string> ids;
  for (const auto& item : bank.items_) {
    if (!ids.insert(item.id).second) throw ParseError("duplicate item id '" + item.id + "'", 0);
  }
  auto known = [&](const std::optional<std::string>& id) { return !id || ids.count(*id) > 0; };
  if (!ids.count(bank.first_)) throw ParseError("unknown first item '" + bank.first_ + "'", 0);
  for (const auto& item : bank.items_) {
    if (!known(item.next_if_correct) || !known(item.next_if_wrong)) {
      throw ParseError("item '" + item.id + "' links to an unknown item", 0);
    }
  }

  // Depth-first cycle check over both branches.
  std::set<std::string> on_path;
  auto visit = [&](auto&& self, const std::string& id) -> void {
    if (!on_path.insert(id).second) throw ParseError("question bank has a cycle at '" + id + "'", 0);
    const auto& item = bank.item(id);
    if (item.next_if_correct) self(self, *item.next_if_correct);
    if (item.next_if_wrong) self(self, *item.next_if_wrong);
    on_path.erase(id);
  };
  visit(visit, bank.first_);
  return bank;
}

QuestionBank QuestionBank::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open question bank '" + path + "'");
  try {
    return from_json(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), 0);
  }
}

const QuestionBank& QuestionBank::standard() {
  static const QuestionBank bank = from_json(Json::parse(embedded::numeracy_bank_json()));
  return bank;
}

const NumeracyItem& QuestionBank::item(std::string_view id) const {
  for (const auto& it : items_) {
    if (it.id == id) return it;
  }
  throw LookupError("unknown numeracy item '" + std::string(id) + "'");
}

bool QuestionBank::is_correct(const NumeracyItem& item, std::string_view given) {
  std::string text(given);
  while (!text.empty() && (text.back() == ' ' || text.back() == '%')) text.pop_back();
  const auto start = text.find_first_not_of(' ');
  if (start == std::string::npos) return false;
  text.erase(0, start);
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) return false;
  return std::fabs(value - item.answer) < 1e-9;
}

NumeracyProgress walk_numeracy(const std::vector<NumeracyAnswer>& answers,
                               const QuestionBank& bank) {
  NumeracyProgress progress;
  const NumeracyItem* expected = &bank.item(bank.first());
  for (const auto& answer : answers) {
    if (expected == nullptr) {
      throw ProtocolError("answer for '" + answer.question_id + "' after the test ended");
    }
    if (answer.question_id != expected->id) {
      throw ProtocolError("answer for '" + answer.question_id + "' is off the adaptive path; expected '" +
                          expected->id + "'");
    }
    const bool correct = QuestionBank::is_correct(*expected, answer.given_answer);
    progress.graded.push_back({answer.question_id, answer.given_answer, correct});
    const auto& next = correct ? expected->next_if_correct : expected->next_if_wrong;
    expected = next ? &bank.item(*next) : nullptr;
  }
  progress.next = expected;
  return progress;
}

NumeracyResult numeracy_score(const std::vector<NumeracyAnswer>& answers,
                              const QuestionBank& bank) {
  auto progress = walk_numeracy(answers, bank);
  if (progress.next != nullptr) {
    throw ProtocolError("numeracy test incomplete; next item is '" + progress.next->id + "'");
  }
  NumeracyResult result;
  for (const auto& g : progress.graded) result.score += g.correct ? 1 : 0;
  result.literate = result.score >= bank.literacy_threshold();
  result.answers = std::move(progress.graded);
  return result;
}

Json to_json(const NumeracyResult& result) {
  Json answers = Json::array();
  for (const auto& a : result.answers) {
    answers.push_back({{"question_id", a.question_id},
                       {"answer", a.given_answer},
                       {"correct", a.correct}});
  }
  Json j;
  j["score"] = result.score;
  j["literate"] = result.literate;
  j["answers"] = std::move(answers);
  return j;
}

}  // namespace weathergame
