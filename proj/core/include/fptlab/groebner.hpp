#ifndef FPTLAB_GROEBNER_HPP
#define FPTLAB_GROEBNER_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fptlab/polyring.hpp"

namespace fptlab {

/// Monomial order on a ring. `permutation[k]` is the ring index of the k-th
/// largest variable; an empty permutation means x_1 > x_2 > ... > x_n.
///
/// `elimination` compares the first `block` ranked variables by grevlex and
/// breaks ties with grevlex on the remaining ones, so it eliminates that block.
struct MonomialOrder {
  enum class Kind { lex, grevlex, elimination };

  Kind kind = Kind::grevlex;
  std::vector<std::size_t> permutation;
  std::size_t block = 0;

  static MonomialOrder grevlex(std::vector<std::size_t> permutation = {});
  static MonomialOrder lex(std::vector<std::size_t> permutation = {});
  static MonomialOrder elimination(std::size_t block);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::string name() const;

  bool operator==(const MonomialOrder& o) const = default;
};

/// Reduced Groebner basis: monic, no leading monomial divides another, tails
/// fully reduced. Elements are sorted by descending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<std::vector<Term>> ordered);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<SparsePoly>& elements() const noexcept { return elements_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }

  bool is_unit() const noexcept;
  bool is_zero() const noexcept { return elements_.empty(); }

  // Fully reduced remainder of f.
  SparsePoly normal_form(const SparsePoly& f) const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<std::vector<Term>> ordered_;  // descending under order_
  std::vector<SparsePoly> elements_;
  std::vector<Monomial> leading_;
};

// Buchberger's algorithm with the Gebauer-Moeller pair criteria, followed by
// inter-reduction.
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<SparsePoly>& generators,
                         const MonomialOrder& order);

}  // namespace fptlab

#endif  // FPTLAB_GROEBNER_HPP
