#include "fptlab/testideals.hpp"

#include "fptlab/errors.hpp"
#include "fptlab/thresholds.hpp"

namespace fptlab {

namespace {

TauReport make_report(const BigRational& t, Ideal tau, unsigned step) {
  TauReport r{t, std::move(tau), step, {}, std::nullopt, false};
  r.length = quotient_length(r.tau);
  if (r.tau.is_monomial()) r.is_radical = monomial_is_radical(r.tau);
  r.equals_max_ideal = ideal_equal(r.tau, Ideal::maximal(r.tau.ring_ptr()));
  return r;
}

Ideal reduced(const Ideal& i) { return Ideal(i.ring_ptr(), i.canonical_generators()); }

}  // namespace

Ideal root_of_power(const SparsePoly& f, const mpz_class& N, unsigned s) {
  if (N < 0) raise(ErrorKind::InvalidParameter, "negative exponent");
  const Prime p = f.characteristic();
  const RingPtr& ring = f.ring_ptr();
  // (f^(pA + d) J)^[1/p] = f^A (f^d J)^[1/p]
  Ideal current = Ideal::unit(ring);
  mpz_class rest = N;
  for (unsigned step = 0; step < s; ++step) {
    mpz_class digit = rest % p;
    rest /= p;
    current = reduced(frobenius_root(current.times(pow_exact(f, digit.get_ui())), p));
  }
  return reduced(current.times(pow_exact(f, to_u64(rest))));
}

TauReport test_ideal_bms(const SparsePoly& f, const BigRational& t, unsigned s_max) {
  if (t.sign() <= 0 || t > BigRational(1)) raise(ErrorKind::InvalidParameter, "t must lie in (0, 1]");
  if (s_max < 2) raise(ErrorKind::InvalidParameter, "s_max must be at least 2");
  const Prime p = f.characteristic();
  auto term = [&](unsigned s) {
    mpz_class ps;
    mpz_ui_pow_ui(ps.get_mpz_t(), p, s);
    return root_of_power(f, (t * BigRational(ps)).ceil(), s);
  };
  Ideal prev = term(1);
  for (unsigned s = 1; s + 1 <= s_max; ++s) {
    Ideal next = term(s + 1);
    if (ideal_equal(prev, next)) return make_report(t, std::move(prev), s);
    prev = std::move(next);
  }
  raise(ErrorKind::NotStabilized, "no two consecutive chain terms agree up to s_max = " + std::to_string(s_max));
}

TauReport test_ideal_chain(const SparsePoly& f, std::uint64_t a, std::uint64_t q) {
  require_frobenius_power(q, f.characteristic());
  if (a < 1 || a > q - 1) raise(ErrorKind::InvalidParameter, "a/(q-1) must lie in (0, 1]");
  if (!is_sharply_fpure(f, a, q)) raise(ErrorKind::NotSharplyFPure, "f^a lies in m^[q]");
  unsigned steps = 0;
  Ideal tau = compatible_chain(f, a, q, &steps);
  BigRational t = rat_reduce(mpz_class(std::to_string(a)), mpz_class(std::to_string(q - 1)));
  return make_report(t, std::move(tau), steps);
}

bool tau_agreement_check(const SparsePoly& f, std::uint64_t a, std::uint64_t q, unsigned s_max) {
  TauReport chain = test_ideal_chain(f, a, q);
  TauReport bms = test_ideal_bms(f, chain.t, s_max);
  return ideal_equal(chain.tau, bms.tau);
}

}  // namespace fptlab
