#ifndef FPTLAB_IO_HPP
#define FPTLAB_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "fptlab/families.hpp"
#include "fptlab/fsignature.hpp"
#include "fptlab/testideals.hpp"
#include "fptlab/thresholds.hpp"

namespace fptlab {

// Machine-readable renderings. Rationals are always "num/den"; CSV rows end in
// LF and carry a trailing float column for readability only.

std::string format_float(const BigRational& r);  // 10 significant digits

std::string nu_csv(const std::vector<NuRecord>& rows);
std::string certificate_json(const FptCertificate& cert);
std::string fpt_json(const SparsePoly& f, const FptInterval& interval, const std::vector<NuRecord>& nus,
                     const std::optional<FptCertificate>& cert);
std::string tau_json(const TauReport& report);
std::string fsig_csv(const std::vector<FsigSample>& samples);
std::string derivative_csv(const DerivativeTable& table);
std::string verify_json(const VerifyReport& report);

}  // namespace fptlab

#endif  // FPTLAB_IO_HPP
