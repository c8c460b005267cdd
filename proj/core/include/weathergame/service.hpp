#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "weathergame/game.hpp"
#include "weathergame/recorder.hpp"
#include "weathergame/store.hpp"

namespace weathergame::api {

enum class ErrorCode { kBadRequest, kNotFound, kPhaseConflict, kSequenceError, kUnauthorized };

std::string_view to_string(ErrorCode code);
int http_status(ErrorCode code);

class ApiError : public std::runtime_error {
 public:
  ApiError(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// {"error": {"code": ..., "message": ...}}
Json error_body(const ApiError& error);

struct ServiceConfig {
  std::uint64_t master_seed = 0;
  // Export is refused when unset.
  std::optional<std::string> admin_token;
  Clock clock = system_clock_ms();
};

// The game behind the /v1 routes, independent of HTTP.
//
// Session state lives on the server; clients only ever see the current
// round's payload. Every state change is appended to the store before the
// method returns. Requests for one session are serialized; a request that
// loses a race sees the new phase and gets PHASE_CONFLICT.
//
// All methods throw ApiError; domain exceptions are translated.
class GameService {
 public:
  // Rebuilds every session already in the store by replay.
  GameService(EventStore& store, ServiceConfig config);

  // POST /v1/sessions. Body: {} or {"demographics": {...}}; null/empty ok.
  Json create_session(const Json& body);
  // GET /v1/sessions/{id}
  Json get_session(const std::string& session_id);
  // GET /v1/sessions/{id}/rounds/{week}
  Json get_round(const std::string& session_id, int week);
  // POST /v1/sessions/{id}/decisions. Body: {"week", "location", "confidence"}.
  Json post_decision(const std::string& session_id, const Json& body);
  // POST /v1/sessions/{id}/numeracy. Body: {"answers": [{"question_id", "answer"}]}.
  // A valid but incomplete prefix returns the next item without advancing.
  Json post_numeracy(const std::string& session_id, const Json& body);
  // GET /v1/sessions/{id}/summary
  Json get_summary(const std::string& session_id);
  // GET /v1/export
  std::string export_events(const std::optional<std::string>& token, const ExportFilter& filter);

  std::size_t session_count() const;

 private:
  struct Slot {
    std::mutex mutex;
    std::optional<SessionRecorder> recorder;
  };

  std::shared_ptr<Slot> slot(const std::string& session_id) const;

  EventStore& store_;
  ServiceConfig config_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::uint64_t counter_ = 0;
};

}  // namespace weathergame::api
