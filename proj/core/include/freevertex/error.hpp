#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace freevertex {

enum class ErrorKind {
  NonUniformEdge,
  DanglingVariable,
  InvalidArgument,
  ParseError,
  TooLarge,
  InvalidColoring,
  PreconditionViolated,
  InternalInvariant,
  NotTwoColorable,
  InvalidParams,
  GenerationFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so front ends can map it
/// onto stable exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

/// Raises InternalInvariant when a structural fact the construction relies on
/// does not hold.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::InternalInvariant, what);
}

}  // namespace freevertex
