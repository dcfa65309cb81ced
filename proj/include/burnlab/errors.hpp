#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace burnlab {

/// Malformed or out-of-range caller input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard or cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph quantity is undefined because the graph is disconnected.
class DisconnectedGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strict simulation found a source that was already burned.
class InvalidScheduleError : public std::runtime_error {
 public:
  InvalidScheduleError(std::int64_t round, const std::string& what)
      : std::runtime_error(what), round_(round) {}

  /// 1-based round of the offending source.
  std::int64_t round() const noexcept { return round_; }

 private:
  std::int64_t round_;
};

/// A construction was asked to run outside the parameter regime it covers.
class BranchInapplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace burnlab
