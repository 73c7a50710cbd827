#pragma once

#include <stdexcept>
#include <string>

namespace platoon {

struct InsufficientHistory : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a step-count formula is evaluated outside the region where its
// logarithm argument lies in (0, 1]. Carries the offending argument so
// callers can report it instead of silently clamping.
struct OutOfDomain : std::runtime_error {
  OutOfDomain(const std::string& what, double argument)
      : std::runtime_error(what), log_argument(argument) {}
  double log_argument;
};

struct DegenerateRate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoSolution : std::runtime_error {
  NoSolution(const std::string& what, double lo_error, double hi_error)
      : std::runtime_error(what),
        terminal_error_lo(lo_error),
        terminal_error_hi(hi_error) {}
  double terminal_error_lo;
  double terminal_error_hi;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace platoon
