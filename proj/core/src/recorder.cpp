#include "weathergame/recorder.hpp"

#include <atomic>
#include <memory>

#include "weathergame/errors.hpp"

namespace weathergame {
namespace {

NumeracyAnswers answers_from(std::span<const SessionEvent> events) {
  NumeracyAnswers answers;
  for (const auto& e : events) {
    answers.push_back({e.body.at("question_id").get<std::string>(), e.body.at("answer").get<std::string>()});
  }
  return answers;
}

// Applies one logged input and checks the derived events against the log.
// Returns the number of log entries consumed.
std::size_t apply_logged(Session& session, const PhaseInput& input,
                         std::span<const SessionEvent> rest, const QuestionBank& bank) {
  Transition t = advance(session, input, bank);
  if (t.events.size() > rest.size()) {
    throw ReplayError("event log ends in the middle of a transition at event " +
                      std::to_string(rest.front().event_id));
  }
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    if (t.events[i].kind != rest[i].kind || t.events[i].body != rest[i].body) {
      throw ReplayError("event " + std::to_string(rest[i].event_id) + " (" +
                        std::string(to_string(rest[i].kind)) + ") does not match the replayed " +
                        std::string(to_string(t.events[i].kind)));
    }
  }
  session = std::move(t.session);
  return t.events.size();
}

}  // namespace

Clock system_clock_ms() {
  return [] { return std::chrono::floor<std::chrono::milliseconds>(std::chrono::system_clock::now()); };
}

Clock stepping_clock(Timestamp start, std::chrono::milliseconds step) {
  auto ticks = std::make_shared<std::atomic<std::int64_t>>(0);
  return [=] { return start + step * ticks->fetch_add(1); };
}

SessionRecorder SessionRecorder::start(EventStore& store, Clock clock, Session session,
                                       std::uint64_t assignment_counter) {
  auto drafts = opening_events(session, assignment_counter);
  SessionRecorder recorder(store, std::move(clock), std::move(session), 0);
  recorder.record(std::move(drafts));
  return recorder;
}

SessionRecorder SessionRecorder::resume(EventStore& store, Clock clock,
                                        const std::string& session_id, const QuestionBank& bank) {
  const auto events = store.load_session(session_id);
  Session session = replay_session(events, bank);
  return SessionRecorder(store, std::move(clock), std::move(session), events.back().event_id);
}

const Session& SessionRecorder::apply(const PhaseInput& input, const QuestionBank& bank) {
  Transition t = advance(session_, input, bank);
  record(std::move(t.events));
  session_ = std::move(t.session);
  return session_;
}

PresentationPayload SessionRecorder::show_round(int week, const Realizer& realizer) {
  auto payload = build_payload(session_, week, realizer);
  Json body;
  body["week"] = week;
  body["payload"] = to_json(payload);
  record({{EventKind::kPayloadShown, std::move(body)}});
  return payload;
}

void SessionRecorder::record(std::vector<EventDraft> drafts) {
  std::vector<SessionEvent> batch;
  batch.reserve(drafts.size());
  std::uint64_t id = last_event_id_;
  for (auto& d : drafts) {
    batch.push_back({++id, session_.session_id, clock_(), d.kind, std::move(d.body)});
  }
  store_->append_batch(batch);
  last_event_id_ = id;
}

Session replay_session(std::span<const SessionEvent> events, const QuestionBank& bank) {
  if (events.size() < 2 || events[0].kind != EventKind::kSessionCreated ||
      events[1].kind != EventKind::kConditionAssigned) {
    throw ReplayError("event log must open with SESSION_CREATED and CONDITION_ASSIGNED");
  }
  Session session;
  try {
    const auto& created = events[0].body;
    session = new_session(created.at("session_id").get<std::string>(),
                          std::stoull(created.at("seed").get<std::string>()),
                          parse_condition(events[1].body.at("condition").get<std::string>()),
                          scenario_from_json(created.at("scenario")));
  } catch (const ReplayError&) {
    throw;
  } catch (const std::exception& e) {
    throw ReplayError(std::string("bad opening events: ") + e.what());
  }
  if (session.session_id != events[0].session_id) throw ReplayError("session id mismatch");

  std::size_t i = 2;
  while (i < events.size()) {
    const auto rest = events.subspan(i);
    const auto& e = events[i];
    try {
      switch (e.kind) {
        case EventKind::kDemographics:
          i += apply_logged(session, demographics_from_json(e.body), rest, bank);
          break;
        case EventKind::kNumeracyAnswer: {
          std::size_t n = 0;
          while (n < rest.size() && rest[n].kind == EventKind::kNumeracyAnswer) ++n;
          i += apply_logged(session, answers_from(rest.first(n)), rest, bank);
          break;
        }
        case EventKind::kDecision:
          i += apply_logged(session,
                            DecisionRecord{e.body.at("week").get<int>(),
                                           parse_location(e.body.at("location").get<std::string>()),
                                           e.body.at("confidence").get<int>()},
                            rest, bank);
          break;
        case EventKind::kPayloadShown:
          if (week_of(session.phase) != e.body.at("week").get<int>()) {
            throw ReplayError("payload shown outside its round");
          }
          ++i;
          break;
        default:
          throw ReplayError("unexpected " + std::string(to_string(e.kind)) + " event");
      }
    } catch (const ReplayError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ReplayError("event " + std::to_string(e.event_id) + ": " + ex.what());
    }
  }
  return session;
}

}  // namespace weathergame
