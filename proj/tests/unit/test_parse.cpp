#include <doctest.h>

#include <random>

#include "fptlab/errors.hpp"
#include "fptlab/parse.hpp"
#include "random_poly.hpp"

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

std::size_t parse_position(std::string_view text) {
  try {
    parse_polynomial(text, 3);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parse examples") {
  auto app = parse_polynomial("x^2*y^2 + x^5 + y^5", 2);
  CHECK(app.ring().variables() == std::vector<std::string>{"x", "y"});
  CHECK(app.to_string() == "x^5 + x^2*y^2 + y^5");

  auto cusp = parse_polynomial("y^2 - x^3", 7);
  CHECK(cusp.ring().variables() == std::vector<std::string>{"y", "x"});
  CHECK(cusp == parse_polynomial("y^2 + 6*x^3", 7));
  CHECK(parse_polynomial("y^2 - x^3", 7, std::vector<std::string>{"x", "y"}).to_string() == "6*x^3 + y^2");

  CHECK(parse_polynomial("(x+y)^2", 2).to_string() == "x^2 + y^2");
  CHECK(parse_polynomial("(x+y)^2", 3).to_string() == "x^2 + 2*x*y + y^2");
}

TEST_CASE("parse grammar details") {
  auto xy = std::vector<std::string>{"x", "y"};
  CHECK(parse_polynomial("2x y", 5, xy) == parse_polynomial("2*x*y", 5, xy));
  CHECK(parse_polynomial("x(x + 1)", 5, xy) == parse_polynomial("x^2 + x", 5, xy));
  CHECK(parse_polynomial("-x + 7", 5, xy).to_string() == "4*x + 2");
  // 123456789012345678901234567891 = 1 mod 7
  CHECK(parse_polynomial("123456789012345678901234567891*x", 7, xy) == parse_polynomial("x", 7, xy));
  CHECK(parse_polynomial("x - x", 5, xy).is_zero());
  CHECK(parse_polynomial("x_1^2 + x_2", 3).ring().variables() == std::vector<std::string>{"x_1", "x_2"});
  CHECK(parse_polynomial("7", 7).is_zero());
  CHECK(parse_polynomial("5", 7).ring().variables() == std::vector<std::string>{"x"});
}

TEST_CASE("parse errors") {
  CHECK(kind_of([] { parse_polynomial("x^^2", 3); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_polynomial("x +", 3); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_polynomial("(x + y", 3); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_polynomial("x $ y", 3); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_polynomial("", 3); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_polynomial("x^99999999999999999999999", 3); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_polynomial("x + z", 3, std::vector<std::string>{"x", "y"}); }) ==
        ErrorKind::UnknownVariable);
  CHECK(parse_position("x $ y") == 2);
  CHECK(parse_position("x + ") == 4);
}

TEST_CASE("render then parse is the identity") {
  std::mt19937_64 rng(13);
  for (Prime p : {2u, 3u, 5u, 7u, 101u}) {
    auto ring = PolyRing::make(p, {"x", "y", "z"});
    for (int i = 0; i < 40; ++i) {
      auto f = testgen::random_poly(rng, ring, 6, 5, i % 2 == 0);
      CHECK(parse_polynomial(f.to_string(), ring) == f);
    }
  }
}
