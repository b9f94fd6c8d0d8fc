#ifndef FPTLAB_POLYRING_HPP
#define FPTLAB_POLYRING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "fptlab/primefield.hpp"

namespace fptlab {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// F_p[x_1, ..., x_n] with named variables.
class PolyRing {
 public:
  // Throws NotPrime, InvalidParameter (no variables / duplicate names).
  static RingPtr make(Prime p, std::vector<std::string> variables);

  Prime characteristic() const noexcept { return p_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const PolyRing& o) const { return p_ == o.p_ && vars_ == o.vars_; }

 private:
  PolyRing(Prime p, std::vector<std::string> vars) : p_(p), vars_(std::move(vars)) {}

  Prime p_;
  std::vector<std::string> vars_;
};

// Throws RingMismatch.
void require_same_ring(const PolyRing& a, const PolyRing& b);

using Exponent = std::uint64_t;

/// Exponent vector. Ordering via <=> is lexicographic with x_1 largest.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 6>;

  Monomial() = default;
  explicit Monomial(std::size_t n) : e_(n, 0) {}
  explicit Monomial(std::span<const Exponent> e) : e_(e.begin(), e.end()) {}
  Monomial(std::initializer_list<Exponent> e) : e_(e.begin(), e.end()) {}

  std::size_t size() const noexcept { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  std::span<const Exponent> exponents() const noexcept { return {e_.data(), e_.size()}; }

  Exponent degree() const;
  bool is_one() const noexcept;
  bool is_square_free() const noexcept;
  // All exponents < bound.
  bool all_below(Exponent bound) const noexcept;
  // this divides o.
  bool divides(const Monomial& o) const noexcept;
  bool coprime(const Monomial& o) const noexcept;

  Monomial operator*(const Monomial& o) const;
  // Requires o | this.
  Monomial operator/(const Monomial& o) const;
  Monomial scaled(Exponent k) const;

  std::strong_ordering operator<=>(const Monomial& o) const noexcept;
  bool operator==(const Monomial& o) const noexcept { return e_ == o.e_; }

  std::size_t hash() const noexcept;

 private:
  Storage e_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial monomial;
  std::uint32_t coeff;
};

/// Sparse polynomial over F_p. Terms are kept sorted ascending in lex order
/// with no zero coefficients, so equal polynomials have equal term lists.
class SparsePoly {
 public:
  explicit SparsePoly(RingPtr ring);

  // Combines like terms; coefficients are reduced mod p.
  static SparsePoly from_terms(RingPtr ring, std::vector<Term> terms);
  static SparsePoly constant(RingPtr ring, std::int64_t c);
  static SparsePoly variable(RingPtr ring, std::size_t index);
  static SparsePoly monomial(RingPtr ring, Monomial m, std::uint32_t coeff = 1);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const PolyRing& ring() const noexcept { return *ring_; }
  Prime characteristic() const noexcept { return ring_->characteristic(); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::uint32_t coefficient(const Monomial& m) const;
  std::uint32_t constant_coefficient() const;
  bool in_maximal_ideal() const { return constant_coefficient() == 0; }
  Exponent total_degree() const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly scaled(std::uint32_t c) const;
  SparsePoly times(const Monomial& m, std::uint32_t c = 1) const;

  // Substitutes x_i -> x_i^k for all i. Coefficients are unchanged: c^q = c in F_p.
  SparsePoly frobenius(Exponent k) const;
  SparsePoly derivative(std::size_t var) const;

  bool operator==(const SparsePoly& o) const;

  // Descending lex, e.g. "x^5 + x^2*y^2 + y^5".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Drops every monomial lying in m^[q] = <x_1^q, ..., x_n^q>.
SparsePoly truncate_mod_bracket(const SparsePoly& f, std::uint64_t q);

// f^a mod m^[q], never materializing the untruncated power.
SparsePoly pow_truncated(const SparsePoly& f, std::uint64_t a, std::uint64_t q);

// Product mod m^[q].
SparsePoly mul_truncated(const SparsePoly& f, const SparsePoly& g, std::uint64_t q);

// Exact f^a.
SparsePoly pow_exact(const SparsePoly& f, std::uint64_t a);

// The unique decomposition f = sum_b g_b^q x^b over b in [0, q)^n.
// Zero components are omitted.
std::map<Monomial, SparsePoly> frobenius_decompose(const SparsePoly& f, std::uint64_t q);

// Exact f^a by enumerating the multinomial expansion; an oracle for pow_truncated.
// Throws ExpansionTooLarge when the index set exceeds max_index_count.
SparsePoly multinomial_expand_power(const SparsePoly& f, std::uint64_t a,
                                    std::uint64_t max_index_count = 10'000'000);

// Exact quotient a / b; throws Internal when b does not divide a.
SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b);

// Binomial coefficient mod p via Lucas' theorem.
std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, Prime p);

}  // namespace fptlab

#endif  // FPTLAB_POLYRING_HPP
