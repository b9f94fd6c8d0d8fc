#include "fptlab/families.hpp"

#include <algorithm>

#include "fptlab/errors.hpp"
#include "fptlab/fsignature.hpp"
#include "fptlab/ideals.hpp"
#include "fptlab/testideals.hpp"
#include "fptlab/thresholds.hpp"

namespace fptlab {

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

using Constraints = std::vector<std::pair<std::string, bool>>;

void enforce(const Constraints& cs) {
  for (const auto& [name, ok] : cs) {
    if (!ok) raise(ErrorKind::ConstraintViolation, "constraint failed: " + name);
  }
}

std::string join_nu(const std::vector<NuRecord>& nus) {
  std::string out = "[";
  for (std::size_t i = 0; i < nus.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(nus[i].nu);
  }
  return out + "]";
}

BigRational rq(std::int64_t a, std::int64_t b) { return BigRational::of(a, b); }

std::string interval_text(const FptInterval& iv) {
  return "(" + iv.lower.to_string() + ", " + iv.upper.to_string() + "] at e = " + std::to_string(iv.e);
}

// Every interval up to e_max contains `value`.
Check nu_interval_check(const SparsePoly& f, unsigned e_max, const BigRational& value) {
  auto nus = nu_sequence(f, e_max);
  Check c{"nu-interval", true, "nu = " + join_nu(nus)};
  for (const auto& r : nus) {
    FptInterval iv = interval_from_nu(r, f.characteristic());
    if (!iv.contains(value)) {
      c.pass = false;
      c.detail += "; " + value.to_string() + " outside " + interval_text(iv);
      return c;
    }
  }
  c.detail += "; " + value.to_string() + " inside " + interval_text(interval_from_nu(nus.back(), f.characteristic()));
  return c;
}

Check chain_check(const SparsePoly& f, std::uint64_t a, std::uint64_t q, const BigRational& expected,
                  FptCertificate* out) {
  FptCertificate cert = certify_fpt(f, a, q);
  Check c{"chain-certificate", false, ""};
  if (!cert.valid) {
    c.detail = "refuted: " + cert.reason;
  } else {
    const bool checked = verify_certificate(f, cert);
    c.pass = checked && cert.value == expected;
    c.detail = "witness " + cert.witness->to_string() + ", value " + cert.value.to_string() +
               (checked ? "" : ", membership re-check failed");
  }
  if (out) *out = std::move(cert);
  return c;
}

std::int64_t mod_signed(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

}  // namespace

// ---------------------------------------------------------------- diagonal family

FamilyInstance theoremA_instance(std::uint64_t p, std::uint64_t d, std::uint64_t n) {
  const auto sd = static_cast<std::int64_t>(d), sn = static_cast<std::int64_t>(n);
  const bool shape = (d >= n && n >= 4) || (d > n && n == 3);
  const std::int64_t disc = shape ? sd * (sn * (sd - 2) - sd) : 0;
  Constraints cs{
      {"p is an odd prime", p > 2 && p < (1ULL << 31) && is_prime(p)},
      {"d >= n >= 4 or d > n = 3", shape},
      {"p does not divide d(n(d-2)-d)", shape && p > 0 && disc % static_cast<std::int64_t>(p) != 0},
  };
  enforce(cs);
  std::vector<std::string> vars;
  for (std::uint64_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  RingPtr ring = PolyRing::make(static_cast<Prime>(p), vars);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m(n);
    m[i] = d;
    terms.push_back({m, 1});
  }
  Monomial prod(n);
  for (std::size_t i = 0; i < n; ++i) prod[i] = d - 2;
  terms.push_back({prod, 1});
  std::optional<BigRational> expected;
  if ((p + 1) % d == 0) {
    const auto sp = static_cast<std::int64_t>(p);
    expected = rq(sn * (sp - sd + 1) + sd, sd * (sp - 1));
  }
  return FamilyInstance{"theorem-a",
                        SparsePoly::from_terms(ring, std::move(terms)),
                        {{"p", static_cast<std::int64_t>(p)}, {"d", sd}, {"n", sn}},
                        expected,
                        rq(sn, sd),
                        "diagonal hypersurface plus (x1...xn)^(d-2); fpt formula for p = -1 mod d",
                        cs,
                        true};
}

VerifyReport theoremA_verify(std::uint64_t p, std::uint64_t d, std::uint64_t n, unsigned e_max) {
  FamilyInstance inst = theoremA_instance(p, d, n);
  if (!inst.expected_fpt) raise(ErrorKind::ConstraintViolation, "constraint failed: p = -1 mod d");
  const SparsePoly& f = inst.f;
  const RingPtr& ring = f.ring_ptr();
  const Prime pp = f.characteristic();
  const std::uint64_t a = (p + 1) / d - 1;  // (p - d + 1)/d
  const std::uint64_t ap = n * a + 1;
  const BigRational expected = *inst.expected_fpt;
  VerifyReport rep{inst, {}, std::nullopt};

  IsolatedResult iso = isolated_criterion(f, ap, p);
  rep.checks.push_back({"isolated-criterion", iso.holds,
                        "f^" + std::to_string(ap) + " mod m^[" + std::to_string(p) + "] = " +
                            pow_truncated(f, ap, p).to_string() + (iso.holds ? ", u = " + std::to_string(iso.unit) : "")});
  BigRational value = rat_reduce(mpz_class(std::to_string(ap)), mpz_class(std::to_string(p - 1)));
  rep.checks.push_back({"value-matches-formula", value == expected,
                        "a/(p-1) = " + value.to_string() + ", formula " + expected.to_string()});

  // d(n(d-2)-d) x_i^d = d(d-2) f + (n(d-2)-2d+2) x_i f_i - (d-2) sum_{j != i} x_j f_j
  {
    const auto sd = static_cast<std::int64_t>(d), sn = static_cast<std::int64_t>(n);
    const std::int64_t sp = pp;
    auto c = [&](std::int64_t v) { return static_cast<std::uint32_t>(mod_signed(v, sp)); };
    std::vector<SparsePoly> xf;
    for (std::size_t j = 0; j < n; ++j) xf.push_back(SparsePoly::variable(ring, j) * f.derivative(j));
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Monomial m(n);
      m[i] = d;
      SparsePoly lhs = SparsePoly::monomial(ring, m, c(sd * (sn * (sd - 2) - sd)));
      SparsePoly rhs = f.scaled(c(sd * (sd - 2))) + xf[i].scaled(c(sn * (sd - 2) - 2 * sd + 2));
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) rhs = rhs - xf[j].scaled(c(sd - 2));
      }
      ok = lhs == rhs;
    }
    rep.checks.push_back({"euler-identity", ok, ok ? "holds for every variable" : "identity fails"});
  }

  FptCertificate cert;
  rep.checks.push_back(chain_check(f, ap, p, expected, &cert));
  if (iso.holds) {
    FptCertificate by_max;
    by_max.valid = true;
    by_max.value = value;
    by_max.a = ap;
    by_max.q = p;
    by_max.witness = Ideal::maximal(ring);
    by_max.method = CertificateMethod::isolated_criterion;
    const bool ok = verify_certificate(f, by_max);
    rep.checks.push_back({"maximal-ideal-witness", ok, "f^a m contained in m^[q]"});
  }
  rep.checks.push_back(nu_interval_check(f, e_max, expected));
  const BigRational& lct = *inst.reference_lct;
  rep.checks.push_back({"fpt-le-lct", expected <= lct, expected.to_string() + " <= " + lct.to_string()});
  rep.checks.push_back({"fpt-ne-lct", !(expected == lct), expected.to_string() + " != " + lct.to_string()});
  mpz_class g;
  mpz_class pz(std::to_string(p));
  mpz_class den = expected.denominator();
  mpz_gcd(g.get_mpz_t(), pz.get_mpz_t(), den.get_mpz_t());
  rep.checks.push_back({"p-coprime-denominator", g == 1, "gcd(" + pz.get_str() + ", " + den.get_str() + ") = " + g.get_str()});

  if (rep.all_pass()) rep.certified_fpt = expected;
  return rep;
}

// ---------------------------------------------------------------- appendix family

FamilyInstance appendix_instance(std::uint64_t n) {
  Constraints cs{{"n >= 2", n >= 2}};
  enforce(cs);
  RingPtr ring = PolyRing::make(2, {"x", "y"});
  const std::uint64_t N = checked_add(checked_mul(2, n), 1);
  std::vector<Term> terms{{Monomial{2, 2}, 1}, {Monomial{N, 0}, 1}, {Monomial{0, N}, 1}};
  return FamilyInstance{"appendix",
                        SparsePoly::from_terms(ring, std::move(terms)),
                        {{"p", 2}, {"n", static_cast<std::int64_t>(n)}},
                        rq(1, 2),
                        rq(1, 2),
                        "x^2y^2 + x^N + y^N with N = 2n+1 in characteristic 2",
                        cs,
                        true};
}

VerifyReport appendix_verify(std::uint64_t n, unsigned e_max) {
  FamilyInstance inst = appendix_instance(n);
  if (e_max == 0 || e_max > 62) raise(ErrorKind::InvalidParameter, "e_max must lie in [1, 62]");
  const SparsePoly& f = inst.f;
  const RingPtr& ring = f.ring_ptr();
  const BigRational half = rq(1, 2);
  VerifyReport rep{inst, {}, std::nullopt};

  auto nus = nu_sequence(f, e_max);
  bool nu_ok = true;
  for (const auto& r : nus) nu_ok = nu_ok && r.nu == (std::uint64_t{1} << (r.e - 1)) - 1;
  rep.checks.push_back({"nu-sequence", nu_ok, "nu = " + join_nu(nus) + ", expected 2^(e-1) - 1"});

  FptInterval iv = interval_from_nu(nus.back(), 2);
  mpz_class width_den;
  mpz_ui_pow_ui(width_den.get_mpz_t(), 2, e_max);
  const bool width_ok = iv.upper - iv.lower == BigRational::of(mpz_class(1), width_den);
  rep.checks.push_back({"fpt-interval", iv.contains(half) && width_ok, interval_text(iv) + " contains 1/2"});

  Ideal expected_tau(ring, {SparsePoly::monomial(ring, Monomial{n, 0}), SparsePoly::monomial(ring, Monomial{1, 1}),
                            SparsePoly::monomial(ring, Monomial{0, n})});
  TauReport tau = test_ideal_bms(f, half, 8);
  rep.checks.push_back({"test-ideal", ideal_equal(tau.tau, expected_tau),
                        "tau(f^(1/2)) = " + tau.tau.to_string() + ", stabilized at s = " + std::to_string(tau.stabilized_at)});
  Ideal root = frobenius_root(Ideal::principal(f), 2);
  rep.checks.push_back({"principal-root", ideal_equal(root, expected_tau), "<f>^[1/2] = " + root.to_string()});
  rep.checks.push_back({"colength", tau.length == Length::finite(2 * n - 1),
                        "length R/tau = " + tau.length.to_string() + ", expected " + std::to_string(2 * n - 1)});
  rep.checks.push_back({"not-radical", tau.is_radical.has_value() && !*tau.is_radical,
                        tau.is_radical ? (*tau.is_radical ? "radical" : "not radical") : "unknown"});
  if (e_max >= 5) {
    DerivativeTable table = left_derivative_seq(f, half, e_max);
    bool decreasing = true;
    std::string detail = "D_e for e >= 4:";
    for (std::size_t i = 3; i < table.rows.size(); ++i) {
      detail += " " + table.rows[i].d.to_string();
      if (i > 3 && table.rows[i].d > table.rows[i - 1].d) decreasing = false;
    }
    rep.checks.push_back({"derivative-decay", decreasing, detail});
  }
  rep.checks.push_back({"fpt-le-lct", half <= *inst.reference_lct, "1/2 <= " + inst.reference_lct->to_string()});
  return rep;
}

// ---------------------------------------------------------------- cusp

FamilyInstance cusp_instance(std::uint64_t p) {
  Constraints cs{{"p is prime", p < (1ULL << 31) && is_prime(p)}, {"p >= 5", p >= 5}};
  enforce(cs);
  RingPtr ring = PolyRing::make(static_cast<Prime>(p), {"x", "y"});
  std::vector<Term> terms{{Monomial{0, 2}, 1}, {Monomial{3, 0}, static_cast<std::uint32_t>(p - 1)}};
  const auto sp = static_cast<std::int64_t>(p);
  BigRational expected = p % 6 == 1 ? rq(5, 6) : rq(5, 6) - rq(1, 6 * sp);
  return FamilyInstance{"cusp",
                        SparsePoly::from_terms(ring, std::move(terms)),
                        {{"p", sp}},
                        expected,
                        rq(5, 6),
                        "y^2 - x^3; fpt 5/6 for p = 1 mod 6 and 5/6 - 1/(6p) for p = 5 mod 6",
                        cs,
                        true};
}

VerifyReport cusp_verify(std::uint64_t p, unsigned e_max) {
  FamilyInstance inst = cusp_instance(p);
  const SparsePoly& f = inst.f;
  const BigRational expected = *inst.expected_fpt;
  VerifyReport rep{inst, {}, std::nullopt};
  if (p % 6 == 1) {
    const std::uint64_t a = 5 * (p - 1) / 6;
    IsolatedResult iso = isolated_criterion(f, a, p);
    rep.checks.push_back({"isolated-criterion", iso.holds,
                          "f^" + std::to_string(a) + " mod m^[" + std::to_string(p) + "] = " +
                              pow_truncated(f, a, p).to_string() + (iso.holds ? ", u = " + std::to_string(iso.unit) : "")});
    rep.checks.push_back(chain_check(f, a, p, expected, nullptr));
    rep.checks.push_back({"fpt-eq-lct", expected == *inst.reference_lct, "5/6 = lct"});
  } else {
    rep.checks.push_back({"fpt-lt-lct", expected < *inst.reference_lct,
                          expected.to_string() + " < " + inst.reference_lct->to_string() + " (bracketed only)"});
  }
  rep.checks.push_back(nu_interval_check(f, e_max, expected));
  if (rep.all_pass() && p % 6 == 1) rep.certified_fpt = expected;
  return rep;
}

// ---------------------------------------------------------------- x^2 y

FamilyInstance x2y_instance(std::uint64_t p) {
  Constraints cs{{"p is prime", p < (1ULL << 31) && is_prime(p)}, {"p is odd", p % 2 == 1}};
  enforce(cs);
  RingPtr ring = PolyRing::make(static_cast<Prime>(p), {"x", "y"});
  return FamilyInstance{"x2y",
                        SparsePoly::monomial(ring, Monomial{2, 1}),
                        {{"p", static_cast<std::int64_t>(p)}},
                        rq(1, 2),
                        rq(1, 2),
                        "x^2 y, a non-reduced curve with fpt 1/2",
                        cs,
                        false};
}

VerifyReport x2y_verify(std::uint64_t p, unsigned e_max) {
  FamilyInstance inst = x2y_instance(p);
  if (e_max == 0) raise(ErrorKind::InvalidParameter, "e_max must be at least 1");
  const SparsePoly& f = inst.f;
  const BigRational half = rq(1, 2);
  VerifyReport rep{inst, {}, std::nullopt};
  rep.checks.push_back(nu_interval_check(f, e_max, half));
  rep.checks.push_back(chain_check(f, (p - 1) / 2, p, half, nullptr));

  DerivativeTable table = left_derivative_seq(f, half, e_max);
  bool exact = true, monotone = true;
  std::string detail = "limit_term:";
  std::optional<BigRational> prev_gap;
  for (const auto& row : table.rows) {
    if (!row.limit_term) {
      exact = false;
      continue;
    }
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, row.e);
    const BigRational target = -(BigRational(1) + BigRational::of(mpz_class(1), pe));
    exact = exact && *row.limit_term == target;
    const BigRational gap = *row.limit_term + BigRational(1);
    const BigRational abs_gap = gap.sign() < 0 ? -gap : gap;
    if (prev_gap && !(abs_gap < *prev_gap)) monotone = false;
    prev_gap = abs_gap;
    detail += " " + row.limit_term->to_string();
  }
  rep.checks.push_back({"limit-term-values", exact, detail + " (expected -(1 + p^-e))"});
  rep.checks.push_back({"limit-term-monotone", monotone, "distance to -1 strictly decreasing"});
  if (rep.all_pass()) rep.certified_fpt = half;
  return rep;
}

}  // namespace fptlab
