#pragma once

#include <stdexcept>
#include <string>

namespace textfoil {

// Transport failure after the retry budget is exhausted.
struct TransportError : std::runtime_error {
  int attempts;
  TransportError(const std::string& msg, int attempts_made)
      : std::runtime_error(msg), attempts(attempts_made) {}
};

struct AuthError : std::runtime_error {
  explicit AuthError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedResponseError : std::runtime_error {
  explicit MalformedResponseError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Backend refused or returned an empty completion; not retryable.
struct RefusalError : std::runtime_error {
  explicit RefusalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Replay-only cassette had no record for the request.
struct CassetteMissError : std::runtime_error {
  explicit CassetteMissError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace textfoil
