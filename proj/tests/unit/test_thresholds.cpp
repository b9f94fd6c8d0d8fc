#include <doctest.h>

#include <random>

#include "dense_oracle.hpp"
#include "fptlab/errors.hpp"
#include "fptlab/parse.hpp"
#include "fptlab/thresholds.hpp"
#include "random_poly.hpp"

using namespace fptlab;

namespace {

SparsePoly P(const char* s, Prime p) { return parse_polynomial(s, p, std::vector<std::string>{"x", "y"}); }

std::vector<std::uint64_t> nus(const SparsePoly& f, unsigned e) {
  std::vector<std::uint64_t> out;
  for (const auto& r : nu_sequence(f, e)) out.push_back(r.nu);
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

const char* kAppendix = "x^2*y^2 + x^5 + y^5";

}  // namespace

TEST_CASE("nu_sequence examples") {
  CHECK(nus(P(kAppendix, 2), 4) == std::vector<std::uint64_t>{0, 1, 3, 7});
  CHECK(nus(P("y^2 - x^3", 7), 2) == std::vector<std::uint64_t>{5, 40});
  for (Prime p : {2u, 3u, 5u}) {
    CHECK(nus(P("x", p), 2) == std::vector<std::uint64_t>{p - 1, p * p - 1});
  }
  CHECK(kind_of([] { nu_sequence(P("x + 1", 3), 2); }) == ErrorKind::NotInMaximalIdeal);
  CHECK(kind_of([] { nu_sequence(P("0", 3), 2); }) == ErrorKind::ZeroPolynomial);
  CHECK(kind_of([] { nu_sequence(P("x", 3), 0); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("nu_sequence agrees with brute force and satisfies the recursion") {
  std::mt19937_64 rng(61);
  for (Prime p : {2u, 3u, 5u}) {
    auto r = PolyRing::make(p, {"x", "y"});
    const unsigned e_max = p == 5 ? 2 : 3;
    for (int i = 0; i < 12; ++i) {
      auto f = testgen::random_poly(rng, r, 4, 4);
      auto seq = nu_sequence(f, e_max);
      std::uint64_t q = 1;
      for (const auto& rec : seq) {
        q *= p;
        CHECK(rec.nu == oracle::nu(f, q));
      }
      for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        CHECK(p * seq[k].nu <= seq[k + 1].nu);
        CHECK(seq[k + 1].nu <= p * seq[k].nu + p - 1);
      }
    }
  }
}

TEST_CASE("fpt_interval examples") {
  auto a = fpt_interval(P(kAppendix, 2), 4);
  CHECK(a.lower == BigRational::of(7, 16));
  CHECK(a.upper == BigRational::of(8, 16));
  CHECK(a.contains(BigRational::of(1, 2)));
  auto c = fpt_interval(P("y^2 - x^3", 7), 2);
  CHECK(c.lower == BigRational::of(40, 49));
  CHECK(c.upper == BigRational::of(41, 49));
  CHECK(c.contains(BigRational::of(5, 6)));
  auto x = fpt_interval(P("x", 3), 1);
  CHECK(x.lower == BigRational::of(2, 3));
  CHECK(x.upper == BigRational(1));
}

TEST_CASE("fpt intervals are nested") {
  std::mt19937_64 rng(67);
  for (Prime p : {2u, 3u}) {
    auto r = PolyRing::make(p, {"x", "y", "z"});
    for (int i = 0; i < 10; ++i) {
      auto f = testgen::random_poly(rng, r, 4, 3);
      auto seq = nu_sequence(f, 4);
      for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        auto outer = interval_from_nu(seq[k], p);
        auto inner = interval_from_nu(seq[k + 1], p);
        CHECK(outer.lower <= inner.lower);
        CHECK(inner.upper <= outer.upper);
      }
    }
  }
}

TEST_CASE("is_sharply_fpure examples") {
  CHECK(is_sharply_fpure(P("y^2 - x^3", 7), 5, 7));
  CHECK(!is_sharply_fpure(P(kAppendix, 2), 1, 2));
  CHECK(is_sharply_fpure(P("x", 2), 1, 2));
  CHECK(kind_of([] { is_sharply_fpure(P("x", 2), 1, 6); }) == ErrorKind::QNotPowerOfP);
}

TEST_CASE("certify_fpt examples") {
  auto cusp = P("y^2 - x^3", 7);
  auto cert = certify_fpt(cusp, 5, 7);
  REQUIRE(cert.valid);
  CHECK(cert.value == BigRational::of(5, 6));
  CHECK(cert.witness->to_string() == "<x, y>");
  CHECK(verify_certificate(cusp, cert));

  auto x = certify_fpt(P("x", 2), 1, 2);
  REQUIRE(x.valid);
  CHECK(x.value == BigRational(1));
  CHECK(x.witness->to_string() == "<x>");

  CHECK(kind_of([] { certify_fpt(P(kAppendix, 2), 1, 3); }) == ErrorKind::QNotPowerOfP);
  CHECK(kind_of([] { certify_fpt(P("x", 3), 3, 3); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { certify_fpt(P("x", 3), 0, 3); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("certify_fpt refutations") {
  // fpt(y^2 - x^3) = 5/6 at p = 7, so 4/6 and 6/6 are refuted.
  auto cusp = P("y^2 - x^3", 7);
  auto low = certify_fpt(cusp, 4, 7);
  CHECK(!low.valid);
  auto high = certify_fpt(cusp, 6, 7);
  CHECK(!high.valid);
  CHECK(!verify_certificate(cusp, high));
  // Appendix polynomial: f in m^[2], so every a/(2-1) fails sharp purity.
  CHECK(!certify_fpt(P(kAppendix, 2), 1, 2).valid);
}

TEST_CASE("certified values lie in every computed interval") {
  struct Case {
    const char* f;
    Prime p;
    std::uint64_t a, q;
  };
  for (const auto& c : {Case{"y^2 - x^3", 7, 5, 7}, Case{"y^2 - x^3", 13, 10, 13}, Case{"x^2*y", 3, 1, 3},
                        Case{"x^2*y", 5, 2, 5}, Case{"x*y", 3, 2, 3}, Case{"x^3 + y^3", 7, 4, 7}}) {
    auto f = P(c.f, c.p);
    auto cert = certify_fpt(f, c.a, c.q);
    REQUIRE(cert.valid);
    for (const auto& rec : nu_sequence(f, 3)) CHECK(interval_from_nu(rec, c.p).contains(cert.value));
  }
}

TEST_CASE("isolated_criterion examples") {
  auto r = isolated_criterion(P("y^2 - x^3", 7), 5, 7);
  CHECK(r.holds);
  CHECK(r.unit == 3);
  auto f = parse_polynomial("x1^4 + x2^4 + x3^4 + x4^4 + x1^2*x2^2*x3^2*x4^2", 3);
  auto t = isolated_criterion(f, 1, 3);
  CHECK(t.holds);
  CHECK(t.unit == 1);
  CHECK(!isolated_criterion(P("x^2*y", 3), 1, 3).holds);
}

TEST_CASE("isolated_criterion implies certification with the maximal ideal") {
  for (Prime p : {7u, 13u, 19u}) {
    auto f = P("y^2 - x^3", p);
    const std::uint64_t a = 5 * (p - 1) / 6;
    if (!isolated_criterion(f, a, p).holds) continue;
    auto cert = certify_fpt(f, a, p);
    REQUIRE(cert.valid);
    CHECK(ideal_equal(*cert.witness, Ideal::maximal(f.ring_ptr())));
  }
}
