#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weathergame {

// Value outside the domain of an operation (out-of-range probability,
// unknown week, confidence outside 1..10, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Key not present in a lookup table.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Operation not valid in the session's current phase.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Re-submission of input for a round that already completed.
class IdempotencyError : public StateError {
 public:
  using StateError::StateError;
};

// Numeracy answers that do not follow the bank's adaptive path.
class ProtocolError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Event id gap or duplicate on append.
class SequenceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotFoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Malformed input text. line() is 1-based; 0 when not line oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace weathergame

namespace weathergame {

// Event log that cannot be replayed into a session, or whose recorded
// outcomes disagree with the recomputed ones.
class ReplayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weathergame
