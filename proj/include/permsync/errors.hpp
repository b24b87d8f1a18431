#pragma once

#include <stdexcept>
#include <string>

namespace permsync {

/// A Type-A statistic applied to a signed permutation or vice versa.
struct StatMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Enumeration request beyond the configured soft guard.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pairwise predicate on sequences of different lengths.
struct LengthMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive mixed-sequence scan would exceed the configured cap.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Precondition of a conditional check not met (e.g. neither ratio pattern).
struct NotApplicableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Negative recurrence coefficient inside the declared k-range.
struct RuleViolationError : std::runtime_error {
  RuleViolationError(const std::string& what, long n, long k)
      : std::runtime_error(what), n(n), k(k) {}
  long n;
  long k;
};

/// Malformed rule file or invalid element description.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace permsync
