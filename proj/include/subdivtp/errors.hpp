#pragma once

#include <stdexcept>
#include <string>

namespace subdivtp {

// Thrown when a requested computation exceeds the configured desk-scale
// budget (enumeration over d! objects, minor counts, subdivision sizes).
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Thrown when a quantity that is a theorem for well-formed input fails to
// hold at runtime (e.g. a derived transformation matrix that is not
// centrally symmetric). Indicates malformed input data or a bug.
class InternalConsistencyError : public std::logic_error {
public:
  explicit InternalConsistencyError(const std::string& msg)
      : std::logic_error(msg) {}
};

}  // namespace subdivtp
