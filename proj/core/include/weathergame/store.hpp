#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "weathergame/events.hpp"
#include "weathergame/game.hpp"

namespace weathergame {

struct ExportFilter {
  std::optional<PresentationCondition> condition;
  // Inclusive bounds on a session's creation time; sessions are exported
  // whole or not at all.
  std::optional<Timestamp> from;
  std::optional<Timestamp> to;
};

// Append-only per-session event log.
//
// Appends must continue each session's id sequence exactly (last + 1);
// anything else is a SequenceError and leaves the store unchanged. Reads
// return snapshots and never observe a partially applied batch.
class EventStore {
 public:
  EventStore() = default;
  EventStore(const EventStore&) = delete;
  EventStore& operator=(const EventStore&) = delete;
  virtual ~EventStore() = default;

  void append(const SessionEvent& event) { append_batch(std::span(&event, 1)); }
  // Validated as a whole before anything is written.
  void append_batch(std::span<const SessionEvent> batch);

  // Throws NotFoundError for an unknown session.
  std::vector<SessionEvent> load_session(const std::string& session_id) const;
  std::uint64_t last_event_id(const std::string& session_id) const;
  std::vector<std::string> session_ids() const;
  std::size_t event_count() const;

  // Canonical JSON lines ordered by (session_id, event_id).
  void export_jsonl(std::ostream& out, const ExportFilter& filter = {}) const;
  std::string export_jsonl(const ExportFilter& filter = {}) const;

 protected:
  // Called with the write lock held, after validation. Must make the batch
  // durable or throw.
  virtual void persist(std::span<const SessionEvent> batch) = 0;
  // Adds already-persisted events to the index (used when loading a file).
  void index_loaded(std::span<const SessionEvent> batch);

 private:
  void validate_locked(std::span<const SessionEvent> batch) const;
  void index_locked(std::span<const SessionEvent> batch);

  mutable std::shared_mutex mutex_;
  std::map<std::string, std::vector<SessionEvent>> sessions_;
  std::size_t event_count_ = 0;
};

class MemoryEventStore final : public EventStore {
 protected:
  void persist(std::span<const SessionEvent>) override {}
};

// JSON-lines file, one event per line. Existing content is loaded and
// sequence-checked on open; each append is fsync'd before returning.
class FileEventStore final : public EventStore {
 public:
  explicit FileEventStore(std::string path);
  ~FileEventStore() override;

  const std::string& path() const { return path_; }

 protected:
  void persist(std::span<const SessionEvent> batch) override;

 private:
  std::string path_;
  int fd_ = -1;
};

// Reads a JSON-lines stream; blank lines are skipped. ParseError carries
// the 1-based line number of the first malformed line.
std::vector<SessionEvent> read_jsonl(std::istream& in);

// Appends events from read_jsonl() into a store, in file order.
void import_events(EventStore& store, std::span<const SessionEvent> events);

}  // namespace weathergame
