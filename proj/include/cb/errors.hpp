#ifndef CB_ERRORS_HPP
#define CB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cb {

// Invalid parameters: out-of-domain values, family/method mismatches,
// malformed input files.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was hit before the computation started
// (vertex cap, grid cap, enumeration cap).
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// An exact search ran out of time. Never converted into an approximate
// answer; audits downgrade the affected point to "unknown".
class TimeoutError : public std::runtime_error {
 public:
  explicit TimeoutError(const std::string& what) : std::runtime_error(what) {}
};

// The SDP solver hit its iteration cap before reaching the requested
// residuals.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A relation was evaluated without an upper bound for a parameter point
// its right-hand side references.
class MissingOperandError : public DomainError {
 public:
  explicit MissingOperandError(const std::string& what) : DomainError(what) {}
};

}  // namespace cb

#endif
