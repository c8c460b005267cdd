#include "weathergame/service.hpp"

#include <cstdio>

#include "weathergame/errors.hpp"
#include "weathergame/rng.hpp"

namespace weathergame::api {
namespace {

constexpr std::uint64_t kSessionStream = 0x5e55ULL;

// Runs fn, mapping domain exceptions onto API error codes.
template <typename Fn>
auto translate(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ApiError&) {
    throw;
  } catch (const NotFoundError& e) {
    throw ApiError(ErrorCode::kNotFound, e.what());
  } catch (const StateError& e) {
    throw ApiError(ErrorCode::kPhaseConflict, e.what());
  } catch (const SequenceError& e) {
    throw ApiError(ErrorCode::kSequenceError, e.what());
  } catch (const DomainError& e) {
    throw ApiError(ErrorCode::kBadRequest, e.what());
  } catch (const ProtocolError& e) {
    throw ApiError(ErrorCode::kBadRequest, e.what());
  } catch (const ParseError& e) {
    throw ApiError(ErrorCode::kBadRequest, e.what());
  } catch (const LookupError& e) {
    throw ApiError(ErrorCode::kBadRequest, e.what());
  } catch (const Json::exception& e) {
    throw ApiError(ErrorCode::kBadRequest, std::string("malformed request body: ") + e.what());
  }
}

void require_object(const Json& body) {
  if (!body.is_object()) throw ApiError(ErrorCode::kBadRequest, "request body must be a JSON object");
}

int integer_field(const Json& body, const char* key) {
  if (!body.contains(key) || !body.at(key).is_number_integer()) {
    throw ApiError(ErrorCode::kBadRequest, std::string("'") + key + "' must be an integer");
  }
  return body.at(key).get<int>();
}

std::string string_field(const Json& body, const char* key) {
  if (!body.contains(key) || !body.at(key).is_string()) {
    throw ApiError(ErrorCode::kBadRequest, std::string("'") + key + "' must be a string");
  }
  return body.at(key).get<std::string>();
}

Json descriptor(const Session& s) {
  Json j;
  j["session_id"] = s.session_id;
  j["condition"] = to_string(s.condition);
  j["phase"] = to_string(s.phase);
  j["balance"] = s.balance;
  j["rounds_completed"] = s.outcomes.size();
  return j;
}

Json item_json(const NumeracyItem& item) {
  return {{"question_id", item.id}, {"prompt", item.prompt}};
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadRequest: return "BAD_REQUEST";
    case ErrorCode::kNotFound: return "NOT_FOUND";
    case ErrorCode::kPhaseConflict: return "PHASE_CONFLICT";
    case ErrorCode::kSequenceError: return "SEQUENCE_ERROR";
    case ErrorCode::kUnauthorized: return "UNAUTHORIZED";
  }
  return "?";
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadRequest: return 400;
    case ErrorCode::kNotFound: return 404;
    case ErrorCode::kPhaseConflict: return 409;
    case ErrorCode::kSequenceError: return 409;
    case ErrorCode::kUnauthorized: return 401;
  }
  return 500;
}

Json error_body(const ApiError& error) {
  Json inner;
  inner["code"] = to_string(error.code());
  inner["message"] = error.what();
  Json j;
  j["error"] = std::move(inner);
  return j;
}

GameService::GameService(EventStore& store, ServiceConfig config)
    : store_(store), config_(std::move(config)) {
  for (const auto& id : store_.session_ids()) {
    auto s = std::make_shared<Slot>();
    s->recorder.emplace(SessionRecorder::resume(store_, config_.clock, id));
    sessions_.emplace(id, std::move(s));
  }
  counter_ = sessions_.size();
}

std::shared_ptr<GameService::Slot> GameService::slot(const std::string& session_id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw ApiError(ErrorCode::kNotFound, "unknown session '" + session_id + "'");
  return it->second;
}

std::size_t GameService::session_count() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

Json GameService::create_session(const Json& body) {
  Demographics demographics;
  if (!body.is_null()) {
    require_object(body);
    if (body.contains("demographics") && !body.at("demographics").is_null()) {
      demographics = translate([&] { return demographics_from_json(body.at("demographics")); });
    }
  }

  auto s = std::make_shared<Slot>();
  std::unique_lock lock(mutex_);
  const std::uint64_t counter = counter_;
  const std::uint64_t seed = derive_seed(config_.master_seed ^ kSessionStream, counter);
  char id[48];
  std::snprintf(id, sizeof id, "ses-%06llu-%08llx", static_cast<unsigned long long>(counter),
                static_cast<unsigned long long>(seed & 0xffffffffULL));
  if (sessions_.count(id)) throw ApiError(ErrorCode::kSequenceError, "session id collision");

  return translate([&] {
    s->recorder.emplace(SessionRecorder::start(store_, config_.clock,
                                               new_session(id, seed, assign_condition(counter)), counter));
    s->recorder->apply(demographics);
    ++counter_;
    sessions_.emplace(id, s);
    return descriptor(s->recorder->session());
  });
}

Json GameService::get_session(const std::string& session_id) {
  auto s = slot(session_id);
  std::lock_guard lock(s->mutex);
  return descriptor(s->recorder->session());
}

Json GameService::get_round(const std::string& session_id, int week) {
  auto s = slot(session_id);
  std::lock_guard lock(s->mutex);
  return translate([&] { return to_json(s->recorder->show_round(week)); });
}

Json GameService::post_decision(const std::string& session_id, const Json& body) {
  require_object(body);
  const int week = integer_field(body, "week");
  const int confidence = integer_field(body, "confidence");
  const std::string location = string_field(body, "location");
  auto s = slot(session_id);
  std::lock_guard lock(s->mutex);
  return translate([&] {
    // Validate ranges before touching the session.
    const auto decision = DecisionRecord::make(week, parse_location(location), confidence);
    const Session& session = s->recorder->apply(decision);
    const RoundOutcome& o = session.outcomes.back();
    Json outcome;
    outcome["rain_occurred"] = o.rain_occurred;
    outcome["correct_location"] = to_string(o.correct_location);
    outcome["payoff"] = o.payoff;
    Json j;
    j["week"] = o.week;
    j["outcome"] = std::move(outcome);
    j["balance"] = session.balance;
    j["phase"] = to_string(session.phase);
    return j;
  });
}

Json GameService::post_numeracy(const std::string& session_id, const Json& body) {
  require_object(body);
  if (!body.contains("answers") || !body.at("answers").is_array()) {
    throw ApiError(ErrorCode::kBadRequest, "'answers' must be an array");
  }
  NumeracyAnswers answers;
  for (const auto& a : body.at("answers")) {
    require_object(a);
    std::string given;
    if (a.contains("answer") && a.at("answer").is_number()) {
      given = a.at("answer").dump();
    } else {
      given = string_field(a, "answer");
    }
    answers.push_back({string_field(a, "question_id"), std::move(given)});
  }
  auto s = slot(session_id);
  std::lock_guard lock(s->mutex);
  return translate([&]() -> Json {
    const Session& current = s->recorder->session();
    if (current.phase != Phase::kNumeracy) {
      throw StateError("numeracy answers not accepted in phase " + std::string(to_string(current.phase)));
    }
    const auto progress = walk_numeracy(answers, QuestionBank::standard());
    Json j;
    if (progress.next != nullptr) {
      j["complete"] = false;
      j["next"] = item_json(*progress.next);
      j["phase"] = to_string(current.phase);
      return j;
    }
    const Session& next = s->recorder->apply(answers);
    j["complete"] = true;
    j["result"] = to_json(*next.numeracy);
    j["phase"] = to_string(next.phase);
    return j;
  });
}

Json GameService::get_summary(const std::string& session_id) {
  auto s = slot(session_id);
  std::lock_guard lock(s->mutex);
  const Session& session = s->recorder->session();
  if (session.phase != Phase::kSummary) {
    throw ApiError(ErrorCode::kPhaseConflict,
                   "summary not available in phase " + std::string(to_string(session.phase)));
  }
  Json rounds = Json::array();
  for (std::size_t i = 0; i < session.outcomes.size(); ++i) {
    const auto& d = session.decisions[i];
    const auto& o = session.outcomes[i];
    rounds.push_back({{"week", d.week},
                      {"location", to_string(d.chosen_location)},
                      {"confidence", d.confidence},
                      {"rain_occurred", o.rain_occurred},
                      {"correct_location", to_string(o.correct_location)},
                      {"payoff", o.payoff}});
  }
  Json j = descriptor(session);
  j["total"] = session.balance;
  j["mean_confidence_pct"] = 10.0 * mean_confidence(session);
  j["rounds"] = std::move(rounds);
  if (session.numeracy) {
    j["numeracy"] = {{"score", session.numeracy->score}, {"literate", session.numeracy->literate}};
  }
  return j;
}

std::string GameService::export_events(const std::optional<std::string>& token,
                                       const ExportFilter& filter) {
  if (!config_.admin_token || config_.admin_token->empty()) {
    throw ApiError(ErrorCode::kUnauthorized, "export disabled: no admin token configured");
  }
  if (!token || *token != *config_.admin_token) {
    throw ApiError(ErrorCode::kUnauthorized, "invalid admin token");
  }
  return store_.export_jsonl(filter);
}

}  // namespace weathergame::api
