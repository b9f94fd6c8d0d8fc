#include "fptlab/fsignature.hpp"

#include "fptlab/errors.hpp"

namespace fptlab {

namespace {

mpz_class zpow(std::uint64_t base, std::uint64_t exp) {
  mpz_class out;
  mpz_class b(std::to_string(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

mpz_class z(std::uint64_t v) { return mpz_class(std::to_string(v)); }

BigRational ratio(std::uint64_t num, const mpz_class& den) { return BigRational::of(z(num), den); }

void require_alpha_at_most_one(std::uint64_t a, std::uint64_t q) {
  if (a > q - 1) raise(ErrorKind::InvalidParameter, "a/(q-1) exceeds 1");
}

// lambda_e for the exponents a delta_e, e = 1..e_max.
std::vector<std::uint64_t> delta_lengths(const SparsePoly& f, std::uint64_t a, std::uint64_t q, unsigned e_max) {
  std::vector<std::uint64_t> out;
  std::uint64_t qe = 1;
  for (unsigned e = 1; e <= e_max; ++e) {
    qe = checked_mul(qe, q);
    out.push_back(length_colon_bracket(f, checked_mul(a, delta(q, e)), qe));
  }
  return out;
}

}  // namespace

unsigned default_e_max(Prime p) {
  if (p == 2) return 8;
  if (p == 3) return 5;
  return 3;
}

std::uint64_t delta(std::uint64_t q, unsigned e) {
  std::uint64_t d = 0;
  for (unsigned i = 0; i < e; ++i) d = checked_add(checked_mul(d, q), 1);
  return d;
}

std::uint64_t a_e(const SparsePoly& f, const BigRational& t, unsigned e) {
  if (t.sign() < 0) raise(ErrorKind::InvalidParameter, "t must be nonnegative");
  if (e == 0) raise(ErrorKind::InvalidParameter, "e must be at least 1");
  const std::uint64_t q = checked_pow(f.characteristic(), e);
  const std::uint64_t a = to_u64((t * BigRational(z(q - 1))).ceil());
  return length_colon_bracket(f, a, q);
}

BigRational fsig_at(const SparsePoly& f, std::uint64_t a, std::uint64_t q) {
  const std::uint64_t len = length_colon_bracket(f, a, q);
  return ratio(len, zpow(q, f.ring().num_vars()));
}

std::vector<FsigSample> fsig_sample(const SparsePoly& f, const std::vector<BigRational>& grid, unsigned e) {
  std::vector<FsigSample> out;
  const mpz_class total = zpow(f.characteristic(), std::uint64_t{e} * f.ring().num_vars());
  for (const auto& t : grid) {
    if (t.sign() < 0 || t > BigRational(1)) raise(ErrorKind::InvalidParameter, "grid values must lie in [0, 1]");
    std::uint64_t len = a_e(f, t, e);
    out.push_back({t, e, len, ratio(len, total)});
  }
  return out;
}

DerivativeTable left_derivative_seq(const SparsePoly& f, const BigRational& alpha, unsigned e_max) {
  if (alpha.sign() <= 0 || alpha > BigRational(1)) raise(ErrorKind::InvalidParameter, "alpha must lie in (0, 1]");
  if (e_max == 0) raise(ErrorKind::InvalidParameter, "e_max must be at least 1");
  const Prime p = f.characteristic();
  const std::size_t n = f.ring().num_vars();
  DerivativeTable table;
  table.alpha = alpha;
  for (unsigned k = 1; k <= e_max; ++k) {
    mpz_class qm1 = zpow(p, k) - 1;
    if (qm1 % alpha.denominator() == 0) {
      table.a = to_u64(alpha.numerator() * (qm1 / alpha.denominator()));
      table.k = k;
      break;
    }
  }
  for (unsigned e = 1; e <= e_max; ++e) {
    const mpz_class pe = zpow(p, e);
    const std::uint64_t q = to_u64(pe);
    DerivativeRow row;
    row.e = e;
    row.exponent = to_u64((alpha * BigRational(pe)).ceil() - 1);
    row.lambda = length_colon_bracket(f, row.exponent, q);
    row.d = ratio(row.lambda, zpow(p, std::uint64_t{e} * (n - 1)));
    if (table.k && e % *table.k == 0) {
      const std::uint64_t qk = checked_pow(p, *table.k);
      if (checked_mul(*table.a, delta(qk, e / *table.k)) != row.exponent) {
        raise(ErrorKind::Internal, "exponent conventions disagree at e = " + std::to_string(e));
      }
      row.limit_term = -(row.d / alpha);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

RationalSeq ell_n_seq(const SparsePoly& f, std::uint64_t a, std::uint64_t q, unsigned n_norm, unsigned e_max) {
  require_frobenius_power(q, f.characteristic());
  require_alpha_at_most_one(a, q);
  const std::size_t n = f.ring().num_vars();
  if (n_norm < 1 || n_norm > n) raise(ErrorKind::InvalidParameter, "n_norm must lie in [1, n]");
  RationalSeq out;
  auto lengths = delta_lengths(f, a, q, e_max);
  for (unsigned e = 1; e <= e_max; ++e) {
    out.emplace_back(e, ratio(lengths[e - 1], zpow(q, std::uint64_t{e} * (n - n_norm))));
  }
  return out;
}

HeightEstimate splitting_height_estimate(const SparsePoly& f, std::uint64_t a, std::uint64_t q, unsigned e_max,
                                         const BigRational& tol) {
  require_frobenius_power(q, f.characteristic());
  if (a >= q - 1) raise(ErrorKind::InvalidParameter, "the height estimate needs a/(q-1) < 1");
  if (e_max == 0) raise(ErrorKind::InvalidParameter, "e_max must be at least 1");
  const std::size_t n = f.ring().num_vars();
  auto lengths = delta_lengths(f, a, q, e_max);
  HeightEstimate est;
  const BigRational floor_ratio = BigRational(1) - tol;
  for (unsigned norm = 1; norm <= n; ++norm) {
    RationalSeq seq;
    for (unsigned e = 1; e <= e_max; ++e) {
      seq.emplace_back(e, ratio(lengths[e - 1], zpow(q, std::uint64_t{e} * (n - norm))));
    }
    bool passes = seq.back().second >= tol;
    for (std::size_t i = 0; passes && i + 1 < seq.size(); ++i) {
      passes = !seq[i].second.is_zero() && seq[i + 1].second / seq[i].second >= floor_ratio;
    }
    if (passes && !est.conclusive) {
      est.height = norm;
      est.conclusive = true;
    }
    est.table.push_back(std::move(seq));
  }
  if (!est.conclusive) est.height = static_cast<unsigned>(n);
  return est;
}

BigRational splitting_ratio_estimate(const SparsePoly& f, std::uint64_t a, std::uint64_t q, unsigned height,
                                     unsigned e_max) {
  require_frobenius_power(q, f.characteristic());
  if (a >= q - 1) raise(ErrorKind::InvalidParameter, "the ratio estimate needs a/(q-1) < 1");
  const std::size_t n = f.ring().num_vars();
  if (height > n) raise(ErrorKind::InvalidParameter, "height exceeds the number of variables");
  if (e_max == 0) raise(ErrorKind::InvalidParameter, "e_max must be at least 1");
  const std::uint64_t qe = checked_pow(q, e_max);
  const std::uint64_t len = length_colon_bracket(f, checked_mul(a, delta(q, e_max)), qe);
  return ratio(len, zpow(q, std::uint64_t{e_max} * (n - height)));
}

std::uint64_t hk_length(const Ideal& ideal, unsigned e) {
  if (!ideal.is_proper()) raise(ErrorKind::NonProperIdeal, "the Hilbert-Kunz length needs a proper ideal");
  const std::uint64_t q = checked_pow(ideal.ring().characteristic(), e);
  Length len = quotient_length(ideal + bracket_power(Ideal::maximal(ideal.ring_ptr()), q));
  return len.value;
}

RationalSeq hk_sequence(const Ideal& ideal, unsigned e_max) {
  if (!ideal.is_proper()) raise(ErrorKind::NonProperIdeal, "the Hilbert-Kunz length needs a proper ideal");
  const int dim = quotient_dimension(ideal);
  RationalSeq out;
  for (unsigned e = 1; e <= e_max; ++e) {
    out.emplace_back(e, ratio(hk_length(ideal, e), zpow(ideal.ring().characteristic(),
                                                          std::uint64_t{e} * static_cast<unsigned>(dim))));
  }
  return out;
}

}  // namespace fptlab
