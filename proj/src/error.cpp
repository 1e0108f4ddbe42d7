#include "tslice/error.hpp"

namespace tslice {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::MalformedInput: return "malformed input";
    case ErrorCode::EmptyInput: return "empty input";
    case ErrorCode::ResolutionUndefined: return "resolution undefined";
    case ErrorCode::DegenerateExtent: return "degenerate extent";
    case ErrorCode::InsufficientEvents: return "insufficient events";
    case ErrorCode::ResolutionTooCoarse: return "resolution too coarse";
    case ErrorCode::ExtentMismatch: return "extent mismatch";
    case ErrorCode::NoEvents: return "no events";
  }
  return "unknown error";
}

}  // namespace tslice
