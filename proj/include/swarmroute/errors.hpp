#pragma once

#include <stdexcept>
#include <string>

namespace swarmroute {

enum class ErrorCode {
  InvalidNodeCount,
  InvalidBandwidthRange,
  InvalidArgument,
  InvalidPath,
  NoPathFound,
  LengthMismatch,
  InvalidCutPoints,
  InvalidIndex,
  OracleTooLarge,
  EmptyReport,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures derive from this; the code lets callers (the CLI in
// particular) map failures onto exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace swarmroute
