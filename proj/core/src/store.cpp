#include "weathergame/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "weathergame/errors.hpp"

namespace weathergame {
namespace {

std::optional<PresentationCondition> condition_of(const std::vector<SessionEvent>& events) {
  for (const auto& e : events) {
    if (e.kind == EventKind::kConditionAssigned) {
      return parse_condition(e.body.at("condition").get<std::string>());
    }
  }
  return std::nullopt;
}

[[noreturn]] void throw_errno(const std::string& what) {
  throw std::runtime_error(what + ": " + std::strerror(errno));
}

}  // namespace

void EventStore::append_batch(std::span<const SessionEvent> batch) {
  if (batch.empty()) return;
  std::unique_lock lock(mutex_);
  validate_locked(batch);
  persist(batch);
  index_locked(batch);
}

void EventStore::index_loaded(std::span<const SessionEvent> batch) {
  std::unique_lock lock(mutex_);
  validate_locked(batch);
  index_locked(batch);
}

void EventStore::validate_locked(std::span<const SessionEvent> batch) const {
  std::unordered_map<std::string, std::uint64_t> last;
  for (const auto& e : batch) {
    auto it = last.find(e.session_id);
    if (it == last.end()) {
      auto s = sessions_.find(e.session_id);
      const std::uint64_t persisted = s == sessions_.end() ? 0 : s->second.back().event_id;
      it = last.emplace(e.session_id, persisted).first;
    }
    if (e.event_id != it->second + 1) {
      throw SequenceError("session '" + e.session_id + "': expected event id " +
                          std::to_string(it->second + 1) + ", got " + std::to_string(e.event_id));
    }
    // Rejects oversized bodies before anything reaches disk.
    (void)to_json_line(e);
    it->second = e.event_id;
  }
}

void EventStore::index_locked(std::span<const SessionEvent> batch) {
  for (const auto& e : batch) sessions_[e.session_id].push_back(e);
  event_count_ += batch.size();
}

std::vector<SessionEvent> EventStore::load_session(const std::string& session_id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw NotFoundError("unknown session '" + session_id + "'");
  return it->second;
}

std::uint64_t EventStore::last_event_id(const std::string& session_id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(session_id);
  return it == sessions_.end() ? 0 : it->second.back().event_id;
}

std::vector<std::string> EventStore::session_ids() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> ids;
  ids.reserve(sessions_.size());
  for (const auto& [id, _] : sessions_) ids.push_back(id);
  return ids;
}

std::size_t EventStore::event_count() const {
  std::shared_lock lock(mutex_);
  return event_count_;
}

void EventStore::export_jsonl(std::ostream& out, const ExportFilter& filter) const {
  std::shared_lock lock(mutex_);
  for (const auto& [id, events] : sessions_) {
    if (filter.condition && condition_of(events) != filter.condition) continue;
    const Timestamp created = events.front().timestamp;
    if (filter.from && created < *filter.from) continue;
    if (filter.to && created > *filter.to) continue;
    for (const auto& e : events) out << to_json_line(e) << '\n';
  }
}

std::string EventStore::export_jsonl(const ExportFilter& filter) const {
  std::ostringstream out;
  export_jsonl(out, filter);
  return out.str();
}

FileEventStore::FileEventStore(std::string path) : path_(std::move(path)) {
  {
    std::ifstream in(path_);
    if (in) {
      const auto events = read_jsonl(in);
      index_loaded(events);
    }
  }
  fd_ = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) throw_errno("cannot open event store '" + path_ + "'");
}

FileEventStore::~FileEventStore() {
  if (fd_ >= 0) ::close(fd_);
}

void FileEventStore::persist(std::span<const SessionEvent> batch) {
  std::string buffer;
  for (const auto& e : batch) {
    buffer += to_json_line(e);
    buffer += '\n';
  }
  const char* data = buffer.data();
  std::size_t left = buffer.size();
  while (left > 0) {
    const ssize_t n = ::write(fd_, data, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw_errno("write to '" + path_ + "' failed");
    }
    data += n;
    left -= static_cast<std::size_t>(n);
  }
  if (::fsync(fd_) != 0) throw_errno("fsync of '" + path_ + "' failed");
}

std::vector<SessionEvent> read_jsonl(std::istream& in) {
  std::vector<SessionEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    events.push_back(event_from_json_line(line, line_no));
  }
  return events;
}

void import_events(EventStore& store, std::span<const SessionEvent> events) {
  store.append_batch(events);
}

}  // namespace weathergame
