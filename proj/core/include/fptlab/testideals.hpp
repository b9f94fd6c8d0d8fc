#ifndef FPTLAB_TESTIDEALS_HPP
#define FPTLAB_TESTIDEALS_HPP

#include <cstdint>
#include <optional>

#include "fptlab/ideals.hpp"
#include "fptlab/primefield.hpp"

namespace fptlab {

struct TauReport {
  BigRational t;
  Ideal tau;
  unsigned stabilized_at = 0;
  Length length;
  std::optional<bool> is_radical;  // empty when tau is not monomial
  bool equals_max_ideal = false;
};

// (f^N)^[1/p^s] computed digit by digit, one p-th root per step.
Ideal root_of_power(const SparsePoly& f, const mpz_class& N, unsigned s);

// I_s = (f^ceil(t p^s))^[1/p^s] for s = 1, 2, ...; returns I_s for the first s
// with I_s = I_{s+1}, s + 1 <= s_max. Throws InvalidParameter for t outside
// (0, 1] or s_max < 2, NotStabilized when the chain has not settled.
TauReport test_ideal_bms(const SparsePoly& f, const BigRational& t, unsigned s_max = 8);

// Minimal b containing f with f^a b in b^[q]. Throws NotSharplyFPure when
// f^a lies in m^[q] and InvalidParameter when a/(q-1) is not in (0, 1].
TauReport test_ideal_chain(const SparsePoly& f, std::uint64_t a, std::uint64_t q);

// Both algorithms at t = a/(q-1) return the same ideal.
bool tau_agreement_check(const SparsePoly& f, std::uint64_t a, std::uint64_t q, unsigned s_max = 8);

}  // namespace fptlab

#endif  // FPTLAB_TESTIDEALS_HPP
