#ifndef FPTLAB_PRIMEFIELD_HPP
#define FPTLAB_PRIMEFIELD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace fptlab {

using Prime = std::uint32_t;

// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Throws NotPrime unless 2 <= p < 2^31 and p is prime.
void require_prime(std::uint64_t p);

// Raw residue arithmetic on values already reduced mod p.
namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, Prime p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, Prime p) {
  return a >= b ? a - b : a + (p - b);
}
inline std::uint32_t neg(std::uint32_t a, Prime p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, Prime p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, Prime p);
std::uint32_t inv(std::uint32_t a, Prime p);
std::uint32_t from_signed(std::int64_t v, Prime p);

}  // namespace fp

/// Element of F_p. Mixing moduli is a checked error.
class FpScalar {
 public:
  FpScalar(std::int64_t value, Prime modulus);

  std::uint32_t value() const noexcept { return value_; }
  Prime modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpScalar operator+(const FpScalar& o) const;
  FpScalar operator-(const FpScalar& o) const;
  FpScalar operator*(const FpScalar& o) const;
  FpScalar operator-() const;
  FpScalar pow(std::uint64_t e) const;

  bool operator==(const FpScalar& o) const = default;

 private:
  struct Raw {};
  FpScalar(Raw, std::uint32_t value, Prime modulus) : value_(value), modulus_(modulus) {}
  void check_same(const FpScalar& o) const;

  std::uint32_t value_;
  Prime modulus_;
};

FpScalar fp_inverse(const FpScalar& a);

// Overflow-checked unsigned helpers (throw Overflow).
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

// Returns e >= 0 with q = p^e, or nullopt.
std::optional<unsigned> log_base(std::uint64_t q, Prime p);

// Returns e >= 1 with q = p^e; throws QNotPowerOfP otherwise.
unsigned require_frobenius_power(std::uint64_t q, Prime p);

/// Exact rational in lowest terms with positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long n);  // NOLINT(google-explicit-constructor)
  explicit BigRational(const mpz_class& n);

  // Throws ZeroDenominator.
  static BigRational of(const mpz_class& num, const mpz_class& den);
  static BigRational of(std::int64_t num, std::int64_t den);
  // Parses "a/b" or "a".
  static BigRational parse(const std::string& text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  mpz_class floor() const;
  mpz_class ceil() const;
  double to_double() const { return value_.get_d(); }

  // Always "num/den", also for integers.
  std::string to_string() const;

  BigRational operator+(const BigRational& o) const;
  BigRational operator-(const BigRational& o) const;
  BigRational operator*(const BigRational& o) const;
  BigRational operator/(const BigRational& o) const;
  BigRational operator-() const;

  bool operator==(const BigRational& o) const { return value_ == o.value_; }
  std::strong_ordering operator<=>(const BigRational& o) const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

BigRational rat_reduce(const mpz_class& n, const mpz_class& d);

// Converts to uint64, throwing Overflow for negatives or values >= 2^64.
std::uint64_t to_u64(const mpz_class& v);

}  // namespace fptlab

#endif  // FPTLAB_PRIMEFIELD_HPP
