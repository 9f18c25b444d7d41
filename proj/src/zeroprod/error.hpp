#pragma once

#include <stdexcept>
#include <string>

namespace zeroprod {

enum class ErrorKind {
  InvalidInput,
  ExcludedRing,
  ResourceLimit,
  ZeroDenominator,
  Parse,
  OutOfRange,
  ContractViolation,
  Io,
  VerificationFailure,
};

const char* error_kind_name(ErrorKind kind) noexcept;

// Every failure raised by the core carries a kind so the C boundary can map
// it onto a stable status code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace zeroprod
