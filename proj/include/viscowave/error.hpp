#pragma once

#include <stdexcept>
#include <string>

namespace viscowave {

enum class ErrorKind {
  Domain,
  BranchCut,
  Convergence,
  Unsupported,
  Singularity,
  Configuration,
  Precondition,
  InfiniteValue,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base exception for every numerical failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::BranchCut: return "branch-cut error";
    case ErrorKind::Convergence: return "convergence failure";
    case ErrorKind::Unsupported: return "unsupported model";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::Configuration: return "configuration error";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::InfiniteValue: return "infinite value";
  }
  return "error";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace viscowave
