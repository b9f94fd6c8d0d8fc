#include "fptlab/thresholds.hpp"

#include "fptlab/errors.hpp"

namespace fptlab {

std::string to_string(CertificateMethod m) {
  return m == CertificateMethod::compatible_chain ? "compatible-chain" : "isolated-criterion";
}

namespace {

void require_nu_input(const SparsePoly& f) {
  if (f.is_zero()) raise(ErrorKind::ZeroPolynomial, "nu is undefined for the zero polynomial");
  if (!f.in_maximal_ideal()) raise(ErrorKind::NotInMaximalIdeal, "f has a nonzero constant term, so nu is infinite");
}

// Largest a in [start, start + limit] with f^a not in m^[q], given that
// f^start is not in m^[q].
std::uint64_t scan_up(const SparsePoly& f, std::uint64_t start, std::uint64_t limit, std::uint64_t q) {
  SparsePoly g = pow_truncated(f, start, q);
  std::uint64_t a = start;
  for (std::uint64_t k = 0; k < limit; ++k) {
    SparsePoly next = mul_truncated(g, f, q);
    if (next.is_zero()) break;
    g = std::move(next);
    ++a;
  }
  return a;
}

}  // namespace

std::vector<NuRecord> nu_sequence(const SparsePoly& f, unsigned e_max) {
  require_nu_input(f);
  if (e_max == 0) raise(ErrorKind::InvalidParameter, "e_max must be at least 1");
  const Prime p = f.characteristic();
  std::vector<NuRecord> out;
  // nu_1 < n p, so the scan limit is never reached.
  std::uint64_t nu = scan_up(f, 0, checked_mul(f.ring().num_vars(), p), p);
  out.push_back({1, nu});
  std::uint64_t q = p;
  for (unsigned e = 2; e <= e_max; ++e) {
    q = checked_mul(q, p);
    nu = scan_up(f, checked_mul(nu, p), p - 1, q);
    out.push_back({e, nu});
  }
  return out;
}

FptInterval interval_from_nu(const NuRecord& r, Prime p) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, r.e);
  mpz_class nu(std::to_string(r.nu));
  return {BigRational::of(nu, q), BigRational::of(nu + 1, q), r.e};
}

FptInterval fpt_interval(const SparsePoly& f, unsigned e) {
  auto seq = nu_sequence(f, e);
  return interval_from_nu(seq.back(), f.characteristic());
}

bool is_sharply_fpure(const SparsePoly& f, std::uint64_t a, std::uint64_t q) {
  return !pow_truncated(f, a, q).is_zero();
}

Ideal compatible_chain(const SparsePoly& f, std::uint64_t a, std::uint64_t q, unsigned* steps) {
  require_frobenius_power(q, f.characteristic());
  const SparsePoly fa = pow_exact(f, a);
  Ideal current = Ideal::principal(f);
  unsigned count = 0;
  for (;;) {
    Ideal grown = current + frobenius_root(Ideal(current.ring_ptr(), current.canonical_generators()).times(fa), q);
    if (current.contains(grown)) break;
    current = Ideal(grown.ring_ptr(), grown.canonical_generators());
    ++count;
  }
  if (steps) *steps = count;
  return current;
}

FptCertificate certify_fpt(const SparsePoly& f, std::uint64_t a, std::uint64_t q) {
  require_frobenius_power(q, f.characteristic());
  if (a < 1) raise(ErrorKind::InvalidParameter, "certification needs a >= 1");
  if (a > q - 1) raise(ErrorKind::InvalidParameter, "a/(q-1) exceeds 1");
  FptCertificate cert;
  cert.a = a;
  cert.q = q;
  cert.value = rat_reduce(mpz_class(std::to_string(a)), mpz_class(std::to_string(q - 1)));
  cert.method = CertificateMethod::compatible_chain;
  if (!is_sharply_fpure(f, a, q)) {
    cert.reason = "f^a lies in m^[q]";
    return cert;
  }
  cert.witness = compatible_chain(f, a, q);
  if (!cert.witness->is_proper()) {
    cert.reason = "the compatible chain reaches the unit ideal";
    return cert;
  }
  cert.valid = true;
  return cert;
}

IsolatedResult isolated_criterion(const SparsePoly& f, std::uint64_t a, std::uint64_t q) {
  require_frobenius_power(q, f.characteristic());
  SparsePoly g = pow_truncated(f, a, q);
  if (g.size() != 1) return {};
  const Term& t = g.terms().front();
  for (std::size_t i = 0; i < t.monomial.size(); ++i) {
    if (t.monomial[i] != q - 1) return {};
  }
  return {true, t.coeff};
}

bool verify_certificate(const SparsePoly& f, const FptCertificate& cert) {
  if (!cert.valid || !cert.witness) return false;
  const Ideal& b = *cert.witness;
  if (!b.is_proper() || !b.contains(f)) return false;
  if (!is_sharply_fpure(f, cert.a, cert.q)) return false;
  const SparsePoly fa = pow_exact(f, cert.a);
  const Ideal bq = bracket_power(b, cert.q);
  for (const auto& h : b.generators()) {
    if (!bq.contains(fa * h)) return false;
  }
  return true;
}

}  // namespace fptlab
