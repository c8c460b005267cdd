#include "weathergame/events.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

#include "weathergame/errors.hpp"

namespace weathergame {
namespace {

constexpr std::array<std::string_view, 8> kKindNames = {
    "SESSION_CREATED", "CONDITION_ASSIGNED", "DEMOGRAPHICS", "NUMERACY_ANSWER",
    "PAYLOAD_SHOWN",   "DECISION",           "OUTCOME",      "SUMMARY",
};

}  // namespace

std::string_view to_string(EventKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

EventKind parse_event_kind(std::string_view text) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == text) return static_cast<EventKind>(i);
  }
  throw DomainError("unknown event kind '" + std::string(text) + "'");
}

std::string format_timestamp(Timestamp t) {
  using namespace std::chrono;
  const auto day = floor<days>(t);
  const year_month_day ymd{day};
  const hh_mm_ss<milliseconds> tod{t - day};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(tod.hours().count()), static_cast<int>(tod.minutes().count()),
                static_cast<int>(tod.seconds().count()),
                static_cast<int>(tod.subseconds().count()));
  return buf;
}

Timestamp parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  int y, mo, d, h, mi, s, ms;
  char tail = 0;
  const std::string str(text);
  if (std::sscanf(str.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d.%3d%c", &y, &mo, &d, &h, &mi, &s, &ms,
                  &tail) != 8 ||
      tail != 'Z' || str.size() != 24) {
    throw DomainError("timestamp is not RFC 3339 UTC with milliseconds: '" + str + "'");
  }
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) throw DomainError("invalid timestamp '" + str + "'");
  return sys_days{ymd} + hours{h} + minutes{mi} + seconds{s} + milliseconds{ms};
}

std::string to_json_line(const SessionEvent& event) {
  Json j;
  j["event_id"] = event.event_id;
  j["session_id"] = event.session_id;
  j["timestamp"] = format_timestamp(event.timestamp);
  j["kind"] = to_string(event.kind);
  j["body"] = event.body;
  std::string line = j.dump(-1, ' ', false, Json::error_handler_t::strict);
  if (line.size() > kMaxEventLineBytes) {
    throw std::length_error("event line exceeds 16 KiB");
  }
  return line;
}

SessionEvent event_from_json_line(std::string_view line, std::size_t line_no) {
  try {
    const Json j = Json::parse(line);
    SessionEvent e;
    e.event_id = j.at("event_id").get<std::uint64_t>();
    e.session_id = j.at("session_id").get<std::string>();
    e.timestamp = parse_timestamp(j.at("timestamp").get<std::string>());
    e.kind = parse_event_kind(j.at("kind").get<std::string>());
    e.body = j.at("body");
    return e;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(std::string("malformed event: ") + ex.what(), line_no);
  }
}

}  // namespace weathergame
