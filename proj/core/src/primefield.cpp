#include "fptlab/primefield.hpp"

#include <array>
#include <limits>

#include "fptlab/errors.hpp"

namespace fptlab {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t b : kBases) {
    std::uint64_t x = powmod64(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    raise(ErrorKind::NotPrime, "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
}

namespace fp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, Prime p) {
  return static_cast<std::uint32_t>(powmod64(a, e, p));
}

std::uint32_t inv(std::uint32_t a, Prime p) {
  if (a % p == 0) raise(ErrorKind::ZeroInverse, "0 has no inverse mod " + std::to_string(p));
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t from_signed(std::int64_t v, Prime p) {
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += p;
  return static_cast<std::uint32_t>(m);
}

}  // namespace fp

FpScalar::FpScalar(std::int64_t value, Prime modulus) : value_(0), modulus_(modulus) {
  require_prime(modulus);
  value_ = fp::from_signed(value, modulus);
}

void FpScalar::check_same(const FpScalar& o) const {
  if (modulus_ != o.modulus_) {
    raise(ErrorKind::ModulusMismatch,
          "F_" + std::to_string(modulus_) + " vs F_" + std::to_string(o.modulus_));
  }
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
  check_same(o);
  return {Raw{}, fp::add(value_, o.value_, modulus_), modulus_};
}

FpScalar FpScalar::operator-(const FpScalar& o) const {
  check_same(o);
  return {Raw{}, fp::sub(value_, o.value_, modulus_), modulus_};
}

FpScalar FpScalar::operator*(const FpScalar& o) const {
  check_same(o);
  return {Raw{}, fp::mul(value_, o.value_, modulus_), modulus_};
}

FpScalar FpScalar::operator-() const { return {Raw{}, fp::neg(value_, modulus_), modulus_}; }

FpScalar FpScalar::pow(std::uint64_t e) const {
  return {Raw{}, fp::pow(value_, e, modulus_), modulus_};
}

FpScalar fp_inverse(const FpScalar& a) {
  return FpScalar(fp::inv(a.value(), a.modulus()), a.modulus());
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) raise(ErrorKind::Overflow, "64-bit addition overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) raise(ErrorKind::Overflow, "64-bit multiplication overflow");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::optional<unsigned> log_base(std::uint64_t q, Prime p) {
  if (q == 0 || p < 2) return std::nullopt;
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return e;
}

unsigned require_frobenius_power(std::uint64_t q, Prime p) {
  auto e = log_base(q, p);
  if (!e || *e == 0) {
    raise(ErrorKind::QNotPowerOfP,
          std::to_string(q) + " is not p^e with e >= 1 for p = " + std::to_string(p));
  }
  return *e;
}

BigRational::BigRational(long n) : value_(n) {}

BigRational::BigRational(const mpz_class& n) : value_(n) {}

BigRational BigRational::of(const mpz_class& num, const mpz_class& den) {
  if (den == 0) raise(ErrorKind::ZeroDenominator, "rational with zero denominator");
  BigRational r;
  r.value_ = mpq_class(num, den);
  r.value_.canonicalize();
  return r;
}

BigRational BigRational::of(std::int64_t num, std::int64_t den) {
  return of(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

BigRational BigRational::parse(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) {
      raise(ErrorKind::InvalidParameter, "malformed rational '" + text + "'");
    }
    return v;
  };
  if (slash == std::string::npos) return BigRational(parse_int(text));
  return of(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

mpz_class BigRational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

mpz_class BigRational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

std::string BigRational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational BigRational::operator+(const BigRational& o) const {
  BigRational r;
  r.value_ = value_ + o.value_;
  return r;
}

BigRational BigRational::operator-(const BigRational& o) const {
  BigRational r;
  r.value_ = value_ - o.value_;
  return r;
}

BigRational BigRational::operator*(const BigRational& o) const {
  BigRational r;
  r.value_ = value_ * o.value_;
  return r;
}

BigRational BigRational::operator/(const BigRational& o) const {
  if (o.is_zero()) raise(ErrorKind::ZeroDenominator, "division by zero rational");
  BigRational r;
  r.value_ = value_ / o.value_;
  return r;
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.value_ = -value_;
  return r;
}

std::strong_ordering BigRational::operator<=>(const BigRational& o) const {
  int c = cmp(value_, o.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

BigRational rat_reduce(const mpz_class& n, const mpz_class& d) { return BigRational::of(n, d); }

std::uint64_t to_u64(const mpz_class& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    raise(ErrorKind::Overflow, "integer " + v.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t lo = 0;
  mpz_export(&lo, nullptr, -1, sizeof(lo), 0, 0, v.get_mpz_t());
  return lo;
}

}  // namespace fptlab
