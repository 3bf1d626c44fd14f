#pragma once

#include <stdexcept>
#include <string>

namespace finduality {

enum class ErrorCode {
  NotALattice,
  NotDistributive,
  NotComplemented,
  SizeExceeded,
  NotT0,
  NotSpectral,
  SchemaError,
  InvariantViolation,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NotComplemented: return "NotComplemented";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::NotT0: return "NotT0";
    case ErrorCode::NotSpectral: return "NotSpectral";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Recoverable failure of a documented precondition or input check.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace finduality

// Internal consistency check. A failure here is a bug in the library, never bad input.
#define FD_ENSURE(cond, msg)                                                                 \
  do {                                                                                       \
    if (!(cond))                                                                             \
      throw std::logic_error(std::string("finduality internal check failed: ") + (msg) +    \
                             " [" #cond "]");                                                \
  } while (0)
