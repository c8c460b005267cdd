#pragma once

#include <chrono>
#include <functional>
#include <span>
#include <string>

#include "weathergame/game.hpp"
#include "weathergame/store.hpp"

namespace weathergame {

using Clock = std::function<Timestamp()>;

Clock system_clock_ms();
// Deterministic clock for simulations and tests: returns start, then
// start + step, start + 2*step, ...
Clock stepping_clock(Timestamp start, std::chrono::milliseconds step);

// Drives one session through the engine and writes every resulting event
// to the store before the new state becomes visible.
//
// Not thread-safe; callers serialize access per session.
class SessionRecorder {
 public:
  // Logs SESSION_CREATED and CONDITION_ASSIGNED for a fresh session.
  static SessionRecorder start(EventStore& store, Clock clock, Session session,
                               std::uint64_t assignment_counter);
  // Rebuilds state from the store. NotFoundError for an unknown id.
  static SessionRecorder resume(EventStore& store, Clock clock, const std::string& session_id,
                                const QuestionBank& bank = QuestionBank::standard());

  const Session& session() const { return session_; }
  std::uint64_t last_event_id() const { return last_event_id_; }

  // advance() plus persistence. On any error the session is unchanged.
  const Session& apply(const PhaseInput& input, const QuestionBank& bank = QuestionBank::standard());

  // build_payload() plus a PAYLOAD_SHOWN event.
  PresentationPayload show_round(int week, const Realizer& realizer = Realizer());

 private:
  SessionRecorder(EventStore& store, Clock clock, Session session, std::uint64_t last_id)
      : store_(&store), clock_(std::move(clock)), session_(std::move(session)), last_event_id_(last_id) {}

  void record(std::vector<EventDraft> drafts);

  EventStore* store_;
  Clock clock_;
  Session session_;
  std::uint64_t last_event_id_;
};

// Reconstructs a session by feeding its logged inputs back through
// advance(). Every derived event (outcomes, summary, graded answers) must
// match the log exactly, otherwise ReplayError. A log that stops between
// phases yields the session as of its last event.
Session replay_session(std::span<const SessionEvent> events,
                       const QuestionBank& bank = QuestionBank::standard());

}  // namespace weathergame
