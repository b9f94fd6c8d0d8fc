#ifndef FPTLAB_THRESHOLDS_HPP
#define FPTLAB_THRESHOLDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fptlab/ideals.hpp"
#include "fptlab/polyring.hpp"
#include "fptlab/primefield.hpp"

namespace fptlab {

/// nu = largest a with f^a not in m^[p^e].
struct NuRecord {
  unsigned e = 0;
  std::uint64_t nu = 0;

  bool operator==(const NuRecord&) const = default;
};

/// fpt(f) lies in (lower, upper], upper - lower = p^-e.
struct FptInterval {
  BigRational lower;
  BigRational upper;
  unsigned e = 0;

  bool contains(const BigRational& t) const { return lower < t && t <= upper; }
};

enum class CertificateMethod { compatible_chain, isolated_criterion };

std::string to_string(CertificateMethod m);

/// Outcome of checking whether fpt(f) = a/(q-1). When `valid` is false the
/// record is a refutation and `reason` says which condition failed.
struct FptCertificate {
  bool valid = false;
  BigRational value;
  std::uint64_t a = 0;
  std::uint64_t q = 0;
  std::optional<Ideal> witness;  // the chain limit, when computed
  CertificateMethod method = CertificateMethod::compatible_chain;
  std::string reason;
};

struct IsolatedResult {
  bool holds = false;
  std::uint32_t unit = 0;  // u when holds
};

// Nested search: nu_1 by ascending scan, nu_{e+1} in [p nu_e, p nu_e + p - 1].
// Throws ZeroPolynomial, NotInMaximalIdeal, InvalidParameter (e_max = 0).
std::vector<NuRecord> nu_sequence(const SparsePoly& f, unsigned e_max);

FptInterval fpt_interval(const SparsePoly& f, unsigned e);
FptInterval interval_from_nu(const NuRecord& r, Prime p);

// f^a not in m^[q].
bool is_sharply_fpure(const SparsePoly& f, std::uint64_t a, std::uint64_t q);

// Least ideal b containing f with f^a b contained in b^[q]: the limit of
// J_0 = <f>, J_{i+1} = J_i + (f^a J_i)^[1/q]. `steps` receives the number of
// strict enlargements.
Ideal compatible_chain(const SparsePoly& f, std::uint64_t a, std::uint64_t q, unsigned* steps = nullptr);

// Requires 1 <= a <= q - 1 (InvalidParameter otherwise).
FptCertificate certify_fpt(const SparsePoly& f, std::uint64_t a, std::uint64_t q);

// f^a = u (x_1...x_n)^(q-1) mod m^[q] for a nonzero u.
IsolatedResult isolated_criterion(const SparsePoly& f, std::uint64_t a, std::uint64_t q);

// Independent re-check of a certificate: b proper, f in b, f^a not in m^[q]
// and f^a h in b^[q] for every generator h of b.
bool verify_certificate(const SparsePoly& f, const FptCertificate& cert);

}  // namespace fptlab

#endif  // FPTLAB_THRESHOLDS_HPP
