#ifndef FPTLAB_IDEALS_HPP
#define FPTLAB_IDEALS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fptlab/groebner.hpp"
#include "fptlab/polyring.hpp"

namespace fptlab {

/// k-dimension of a quotient R/I, possibly infinite.
struct Length {
  bool infinite = false;
  std::uint64_t value = 0;

  static Length finite(std::uint64_t v) { return {false, v}; }
  static Length infinity() { return {true, 0}; }

  bool operator==(const Length& o) const = default;
  std::string to_string() const { return infinite ? "infinite" : std::to_string(value); }
};

namespace detail {
struct GbCache;
}

/// Ideal of F_p[x_1..x_n] given by generators. Immutable; Groebner bases are
/// computed on demand and cached per monomial order. Copies share the cache.
class Ideal {
 public:
  // Zero generators are dropped.
  Ideal(RingPtr ring, std::vector<SparsePoly> generators);

  static Ideal zero(RingPtr ring);
  static Ideal unit(RingPtr ring);
  static Ideal maximal(RingPtr ring);
  static Ideal principal(const SparsePoly& f);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const PolyRing& ring() const noexcept { return *ring_; }
  const std::vector<SparsePoly>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_monomial() const;

  std::shared_ptr<const GroebnerBasis> groebner_basis(
      const MonomialOrder& order = MonomialOrder::grevlex()) const;
  bool has_cached_basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  bool is_proper() const;
  bool contains(const SparsePoly& f) const;
  bool contains(const Ideal& other) const;

  Ideal operator+(const Ideal& o) const;
  // g * I
  Ideal times(const SparsePoly& g) const;

  // Reduced grevlex basis sorted descending by leading lex term.
  std::vector<SparsePoly> canonical_generators() const;
  std::vector<std::string> canonical_strings() const;
  // "<g1, g2, ...>" from canonical_generators().
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<SparsePoly> gens_;
  std::shared_ptr<detail::GbCache> cache_;
};

// I^[q] = <g^q : g a generator>.
Ideal bracket_power(const Ideal& ideal, std::uint64_t q);

// I^[1/q]: the ideal generated by every component of the p^e-adic
// decomposition of every generator.
Ideal frobenius_root(const Ideal& ideal, std::uint64_t q);

// Copy of `ideal` whose cache holds a reduced basis for `order`.
Ideal groebner(const Ideal& ideal, const MonomialOrder& order);

SparsePoly normal_form(const SparsePoly& f, const Ideal& ideal);

// Throws RingMismatch.
bool ideal_equal(const Ideal& a, const Ideal& b);

// (I : g) via elimination of one auxiliary variable from t*I + (1 - t)*<g>.
// Throws ZeroDivisorArg for g = 0.
Ideal colon_principal(const Ideal& ideal, const SparsePoly& g);

// Number of standard monomials of the grevlex basis.
Length quotient_length(const Ideal& ideal);

// Krull dimension of R/I; n for the zero ideal, -1 for the unit ideal.
int quotient_dimension(const Ideal& ideal);

// length(R / (m^[q] : f^a)), computed as the F_p-rank of multiplication by
// f^a on R/m^[q]. Throws MatrixTooLarge when q^n exceeds max_dense_cells().
std::uint64_t length_colon_bracket(const SparsePoly& f, std::uint64_t a, std::uint64_t q);

// Monomial ideals only (throws NotMonomialIdeal).
bool monomial_is_radical(const Ideal& ideal);

// Dense-size guard shared by the rank method. Defaults to 2^24 or the value
// of FPTLAB_MAX_DENSE_CELLS.
std::uint64_t max_dense_cells();
void set_max_dense_cells(std::uint64_t cells);

}  // namespace fptlab

#endif  // FPTLAB_IDEALS_HPP
