#include "swarmroute/errors.hpp"

namespace swarmroute {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidNodeCount: return "InvalidNodeCount";
    case ErrorCode::InvalidBandwidthRange: return "InvalidBandwidthRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::NoPathFound: return "NoPathFound";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidCutPoints: return "InvalidCutPoints";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::EmptyReport: return "EmptyReport";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace swarmroute
