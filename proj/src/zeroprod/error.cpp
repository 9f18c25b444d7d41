#include "zeroprod/error.hpp"

namespace zeroprod {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::ExcludedRing: return "excluded ring";
    case ErrorKind::ResourceLimit: return "resource limit";
    case ErrorKind::ZeroDenominator: return "zero denominator";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::ContractViolation: return "contract violation";
    case ErrorKind::Io: return "i/o error";
    case ErrorKind::VerificationFailure: return "verification failure";
  }
  return "unknown";
}

}  // namespace zeroprod
