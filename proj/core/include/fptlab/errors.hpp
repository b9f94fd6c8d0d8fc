#ifndef FPTLAB_ERRORS_HPP
#define FPTLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fptlab {

enum class ErrorKind {
  ZeroInverse,
  ModulusMismatch,
  NotPrime,
  ZeroDenominator,
  Overflow,
  QNotPowerOfP,
  ExpansionTooLarge,
  RingMismatch,
  ZeroDivisorArg,
  MatrixTooLarge,
  NotMonomialIdeal,
  NotInMaximalIdeal,
  ZeroPolynomial,
  InvalidParameter,
  NotStabilized,
  NotSharplyFPure,
  NonProperIdeal,
  ConstraintViolation,
  ParseError,
  UnknownVariable,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace fptlab

#endif  // FPTLAB_ERRORS_HPP
