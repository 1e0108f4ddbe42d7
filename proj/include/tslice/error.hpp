#pragma once

#include <stdexcept>
#include <string>

namespace tslice {

// Each kind maps to a distinct process exit code in the CLI.
enum class ErrorCode {
  InvalidArgument = 2,
  Io = 3,
  MalformedInput = 4,
  EmptyInput = 5,
  ResolutionUndefined = 6,
  DegenerateExtent = 7,
  InsufficientEvents = 8,
  ResolutionTooCoarse = 9,
  ExtentMismatch = 10,
  NoEvents = 11,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tslice
