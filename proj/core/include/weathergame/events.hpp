#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include "weathergame/forecast.hpp"

namespace weathergame {

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

enum class EventKind {
  kSessionCreated,
  kConditionAssigned,
  kDemographics,
  kNumeracyAnswer,
  kPayloadShown,
  kDecision,
  kOutcome,
  kSummary,
};

std::string_view to_string(EventKind kind);
EventKind parse_event_kind(std::string_view text);

// RFC 3339, UTC, millisecond precision: "2016-06-01T09:30:00.250Z".
std::string format_timestamp(Timestamp t);
Timestamp parse_timestamp(std::string_view text);

// Exported lines may not exceed this many bytes.
inline constexpr std::size_t kMaxEventLineBytes = 16 * 1024;

struct SessionEvent {
  std::uint64_t event_id = 0;  // 1-based, gapless per session
  std::string session_id;
  Timestamp timestamp{};
  EventKind kind = EventKind::kSessionCreated;
  Json body;

  friend bool operator==(const SessionEvent&, const SessionEvent&) = default;
};

// One canonical JSON-lines record (no trailing newline). Field order is
// event_id, session_id, timestamp, kind, body. Throws std::length_error if
// the line would exceed kMaxEventLineBytes.
std::string to_json_line(const SessionEvent& event);
// Throws ParseError (line number as given) on malformed input.
SessionEvent event_from_json_line(std::string_view line, std::size_t line_no = 0);

}  // namespace weathergame
