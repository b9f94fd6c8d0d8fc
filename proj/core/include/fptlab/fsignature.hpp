#ifndef FPTLAB_FSIGNATURE_HPP
#define FPTLAB_FSIGNATURE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fptlab/ideals.hpp"
#include "fptlab/primefield.hpp"

namespace fptlab {

struct FsigSample {
  BigRational t;
  unsigned e = 0;
  std::uint64_t a_e = 0;
  BigRational s_e;  // a_e / p^(e n)
};

struct DerivativeRow {
  unsigned e = 0;
  std::uint64_t exponent = 0;  // ceil(alpha p^e) - 1
  std::uint64_t lambda = 0;
  BigRational d;  // lambda / p^(e (n - 1))
  // -d / alpha, on rows where p^e is a power of the q in alpha = a/(q-1).
  std::optional<BigRational> limit_term;
};

struct DerivativeTable {
  BigRational alpha;
  std::optional<std::uint64_t> a;  // alpha = a/(q-1) with q = p^k, k minimal
  std::optional<unsigned> k;
  std::vector<DerivativeRow> rows;
};

using RationalSeq = std::vector<std::pair<unsigned, BigRational>>;

struct HeightEstimate {
  unsigned height = 0;
  bool conclusive = false;  // false when no n_norm passed the heuristic
  std::vector<RationalSeq> table;  // table[n_norm - 1]
};

// Dense guard defaults per characteristic: 8 for p = 2, 5 for p = 3, else 3.
unsigned default_e_max(Prime p);

// lambda(R / (m^[p^e] : f^ceil(t (p^e - 1)))).
std::uint64_t a_e(const SparsePoly& f, const BigRational& t, unsigned e);

// lambda(R / (m^[q] : f^a)) / q^n.
BigRational fsig_at(const SparsePoly& f, std::uint64_t a, std::uint64_t q);

std::vector<FsigSample> fsig_sample(const SparsePoly& f, const std::vector<BigRational>& grid, unsigned e);

// alpha in (0, 1].
DerivativeTable left_derivative_seq(const SparsePoly& f, const BigRational& alpha, unsigned e_max);

// delta_e = (q^e - 1)/(q - 1).
std::uint64_t delta(std::uint64_t q, unsigned e);

// lambda(R / (m^[q^e] : f^(a delta_e))) / q^(e (n - n_norm)) for e = 1..e_max.
RationalSeq ell_n_seq(const SparsePoly& f, std::uint64_t a, std::uint64_t q, unsigned n_norm, unsigned e_max);

// Heuristic, not a proof: the smallest n_norm whose sequence ends at or above
// tol with successive ratios at least 1 - tol. Requires a/(q-1) < 1.
HeightEstimate splitting_height_estimate(const SparsePoly& f, std::uint64_t a, std::uint64_t q, unsigned e_max,
                                         const BigRational& tol = BigRational::of(1, 4));

// The e_max term of ell_n_seq with n_norm = height.
BigRational splitting_ratio_estimate(const SparsePoly& f, std::uint64_t a, std::uint64_t q, unsigned height,
                                     unsigned e_max);

// lambda(R / (I + m^[p^e])). Throws NonProperIdeal.
std::uint64_t hk_length(const Ideal& ideal, unsigned e);

// (e, hk_length(I, e) / p^(e dim R/I)) for e = 1..e_max.
RationalSeq hk_sequence(const Ideal& ideal, unsigned e_max);

}  // namespace fptlab

#endif  // FPTLAB_FSIGNATURE_HPP
