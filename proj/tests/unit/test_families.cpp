#include <doctest.h>

#include "fptlab/errors.hpp"
#include "fptlab/families.hpp"
#include "fptlab/ideals.hpp"
#include "fptlab/thresholds.hpp"

using namespace fptlab;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

BigRational Q(std::int64_t a, std::int64_t b) { return BigRational::of(a, b); }

void require_all_pass(const VerifyReport& rep) {
  for (const auto& c : rep.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("theoremA instances") {
  auto inst = theoremA_instance(7, 4, 4);
  CHECK(inst.f.to_string() == "x1^4 + x1^2*x2^2*x3^2*x4^2 + x2^4 + x3^4 + x4^4");
  CHECK(inst.expected_fpt == std::optional<BigRational>(Q(5, 6)));
  CHECK(inst.reference_lct == std::optional<BigRational>(Q(1, 1)));
  CHECK(theoremA_instance(19, 5, 3).expected_fpt == std::optional<BigRational>(Q(5, 9)));
  CHECK(theoremA_instance(3, 4, 4).expected_fpt == std::optional<BigRational>(Q(1, 2)));
  // 5 is not -1 mod 4: the polynomial exists but no closed-form threshold
  CHECK(!theoremA_instance(5, 4, 4).expected_fpt.has_value());

  CHECK(kind_of([] { theoremA_instance(2, 4, 4); }) == ErrorKind::ConstraintViolation);
  CHECK(kind_of([] { theoremA_instance(9, 4, 4); }) == ErrorKind::ConstraintViolation);
  CHECK(kind_of([] { theoremA_instance(7, 3, 3); }) == ErrorKind::ConstraintViolation);
  CHECK(kind_of([] { theoremA_instance(7, 3, 4); }) == ErrorKind::ConstraintViolation);
  // d(n(d-2)-d) = 5 * (3*3 - 5) = 20, divisible by 5
  CHECK(kind_of([] { theoremA_instance(5, 5, 3); }) == ErrorKind::ConstraintViolation);
  CHECK(kind_of([] { theoremA_verify(5, 4, 4); }) == ErrorKind::ConstraintViolation);
}

TEST_CASE("theoremA verification") {
  struct Case {
    std::uint64_t p, d, n;
    std::int64_t num, den;
  };
  for (const auto& c : {Case{7, 4, 4, 5, 6}, Case{19, 5, 3, 5, 9}, Case{3, 4, 4, 1, 2}, Case{11, 4, 4, 9, 10}}) {
    auto rep = theoremA_verify(c.p, c.d, c.n);
    require_all_pass(rep);
    CHECK(rep.certified_fpt == std::optional<BigRational>(Q(c.num, c.den)));
    REQUIRE(rep.find("maximal-ideal-witness") != nullptr);
    CHECK(rep.find("chain-certificate")->detail.find("witness <") != std::string::npos);
  }
  CHECK(theoremA_verify(7, 4, 4).find("isolated-criterion")->detail.find("u = 1") != std::string::npos);
  CHECK(theoremA_verify(19, 5, 3).find("isolated-criterion")->detail.find("u = 4") != std::string::npos);
  require_all_pass(theoremA_verify(7, 4, 4, 2));
}

TEST_CASE("appendix verification") {
  for (std::uint64_t n : {2u, 3u, 4u}) {
    auto rep = appendix_verify(n);
    require_all_pass(rep);
    CHECK(!rep.certified_fpt.has_value());
    CHECK(rep.find("derivative-decay") != nullptr);
  }
  CHECK(appendix_verify(2, 4).find("derivative-decay") == nullptr);
  CHECK(appendix_instance(3).f.to_string() == "x^7 + x^2*y^2 + y^7");
  CHECK(kind_of([] { appendix_instance(1); }) == ErrorKind::ConstraintViolation);
  CHECK(kind_of([] { appendix_verify(2, 0); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("cusp verification") {
  auto seven = cusp_verify(7);
  require_all_pass(seven);
  CHECK(seven.certified_fpt == std::optional<BigRational>(Q(5, 6)));
  CHECK(seven.find("isolated-criterion")->detail.find("u = 3") != std::string::npos);
  CHECK(seven.find("chain-certificate")->detail.find("witness <x, y>") != std::string::npos);

  auto five = cusp_verify(5);
  require_all_pass(five);
  CHECK(!five.certified_fpt.has_value());
  CHECK(five.instance.expected_fpt == std::optional<BigRational>(Q(4, 5)));
  CHECK(five.find("nu-interval")->detail.find("[3, 19, 99]") != std::string::npos);

  require_all_pass(cusp_verify(13));
  require_all_pass(cusp_verify(11));
  CHECK(kind_of([] { cusp_instance(3); }) == ErrorKind::ConstraintViolation);
  CHECK(kind_of([] { cusp_instance(9); }) == ErrorKind::ConstraintViolation);
}

TEST_CASE("x^2 y verification") {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    auto rep = x2y_verify(p, 3);
    require_all_pass(rep);
    CHECK(rep.certified_fpt == std::optional<BigRational>(Q(1, 2)));
  }
  auto deep = x2y_verify(3, 5);
  require_all_pass(deep);
  CHECK(deep.find("limit-term-values")->detail.find("-244/243") != std::string::npos);
  CHECK(!x2y_instance(3).square_free);
  CHECK(kind_of([] { x2y_instance(2); }) == ErrorKind::ConstraintViolation);
}

TEST_CASE("certified witnesses have small dimension") {
  // R/b has dimension at most n - 2 for square-free f
  std::vector<VerifyReport> reps{theoremA_verify(7, 4, 4), theoremA_verify(19, 5, 3), cusp_verify(7)};
  for (const auto& rep : reps) {
    REQUIRE(rep.instance.square_free);
    auto cert = certify_fpt(rep.instance.f, rep.certified_fpt->numerator().get_ui() *
                                                (rep.instance.f.characteristic() - 1) /
                                                rep.certified_fpt->denominator().get_ui(),
                            rep.instance.f.characteristic());
    REQUIRE(cert.valid);
    const int n = static_cast<int>(rep.instance.f.ring().num_vars());
    CHECK(quotient_dimension(*cert.witness) <= n - 2);
  }
}
