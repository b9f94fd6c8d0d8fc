#ifndef FPTLAB_TESTS_RANDOM_POLY_HPP
#define FPTLAB_TESTS_RANDOM_POLY_HPP

#include <random>
#include <vector>

#include "fptlab/polyring.hpp"

namespace testgen {

// Random nonzero polynomial with up to `max_terms` terms of per-variable
// degree <= max_deg. With `in_max_ideal` the constant term is dropped.
inline fptlab::SparsePoly random_poly(std::mt19937_64& rng, const fptlab::RingPtr& ring, unsigned max_terms,
                                      unsigned max_deg, bool in_max_ideal = true) {
  const auto p = ring->characteristic();
  const auto n = ring->num_vars();
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint64_t> deg(0, max_deg);
  std::uniform_int_distribution<std::uint32_t> coeff(1, p - 1);
  for (;;) {
    std::vector<fptlab::Term> terms;
    const unsigned k = nterms(rng);
    for (unsigned i = 0; i < k; ++i) {
      fptlab::Monomial m(n);
      for (std::size_t j = 0; j < n; ++j) m[j] = deg(rng);
      if (in_max_ideal && m.is_one()) continue;
      terms.push_back({m, coeff(rng)});
    }
    auto f = fptlab::SparsePoly::from_terms(ring, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

}  // namespace testgen

#endif  // FPTLAB_TESTS_RANDOM_POLY_HPP
