#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nacflex {

enum class ErrorKind {
  InvalidVertex,
  InvalidGraph,
  InvalidArgument,
  Precondition,
  NotNac,
  InstanceTooLarge,
  Parity,
  RejectionBudget,
  Parse,
  Io,
  Internal,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "invalid-vertex";
    case ErrorKind::InvalidGraph: return "invalid-graph";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Precondition: return "precondition-violation";
    case ErrorKind::NotNac: return "not-a-NAC-colouring";
    case ErrorKind::InstanceTooLarge: return "instance-too-large";
    case ErrorKind::Parity: return "parity-violation";
    case ErrorKind::RejectionBudget: return "rejection-budget-exceeded";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Io: return "io-error";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace nacflex
