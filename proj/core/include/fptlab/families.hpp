#ifndef FPTLAB_FAMILIES_HPP
#define FPTLAB_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fptlab/polyring.hpp"
#include "fptlab/primefield.hpp"

namespace fptlab {

/// A named example polynomial with its expected threshold and stored lct.
struct FamilyInstance {
  std::string family;
  SparsePoly f;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::optional<BigRational> expected_fpt;
  std::optional<BigRational> reference_lct;  // stored constant, never computed
  std::string provenance;
  std::vector<std::pair<std::string, bool>> constraints_checked;
  bool square_free = false;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  FamilyInstance instance;
  std::vector<Check> checks;
  std::optional<BigRational> certified_fpt;

  bool all_pass() const;
  const Check* find(const std::string& name) const;
};

// f = x1^d + ... + xn^d + (x1...xn)^(d-2) over F_p. Throws ConstraintViolation.
FamilyInstance theoremA_instance(std::uint64_t p, std::uint64_t d, std::uint64_t n);
// Additionally requires p = -1 mod d. `e_max` bounds the nu-interval check.
VerifyReport theoremA_verify(std::uint64_t p, std::uint64_t d, std::uint64_t n, unsigned e_max = 1);

// f = x^2 y^2 + x^(2n+1) + y^(2n+1) over F_2, n >= 2.
FamilyInstance appendix_instance(std::uint64_t n);
VerifyReport appendix_verify(std::uint64_t n, unsigned e_max = 8);

// f = y^2 - x^3 over F_p, p >= 5.
FamilyInstance cusp_instance(std::uint64_t p);
VerifyReport cusp_verify(std::uint64_t p, unsigned e_max = 3);

// f = x^2 y over F_p, p odd.
FamilyInstance x2y_instance(std::uint64_t p);
VerifyReport x2y_verify(std::uint64_t p, unsigned e_max = 3);

}  // namespace fptlab

#endif  // FPTLAB_FAMILIES_HPP
