#pragma once

#include <stdexcept>
#include <string>

namespace spectile {

enum class ErrorKind {
  InvalidArgument,
  NotSquareFree,
  InvalidDivisor,
  InvalidPrimes,
  EmptyMultiSet,
  PreconditionViolated,
  SizeMismatch,
  Overflow,
  ParseError,
  Internal,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::InvalidDivisor: return "InvalidDivisor";
    case ErrorKind::InvalidPrimes: return "InvalidPrimes";
    case ErrorKind::EmptyMultiSet: return "EmptyMultiSet";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spectile
