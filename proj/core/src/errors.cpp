#include "fptlab/errors.hpp"

namespace fptlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::QNotPowerOfP: return "QNotPowerOfP";
    case ErrorKind::ExpansionTooLarge: return "ExpansionTooLarge";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroDivisorArg: return "ZeroDivisorArg";
    case ErrorKind::MatrixTooLarge: return "MatrixTooLarge";
    case ErrorKind::NotMonomialIdeal: return "NotMonomialIdeal";
    case ErrorKind::NotInMaximalIdeal: return "NotInMaximalIdeal";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::NotSharplyFPure: return "NotSharplyFPure";
    case ErrorKind::NonProperIdeal: return "NonProperIdeal";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(ErrorKind::ParseError, what + " at position " + std::to_string(position)),
      position_(position) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fptlab
