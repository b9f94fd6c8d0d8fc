#include <doctest.h>

#include <random>
#include <thread>

#include "dense_oracle.hpp"
#include "fptlab/errors.hpp"
#include "fptlab/ideals.hpp"
#include "fptlab/parse.hpp"
#include "random_poly.hpp"

using namespace fptlab;

namespace {

RingPtr ring2(Prime p) { return PolyRing::make(p, {"x", "y"}); }

SparsePoly P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<SparsePoly> g;
  for (const char* s : gens) g.push_back(P(r, s));
  return Ideal(r, std::move(g));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("bracket_power examples") {
  auto r2 = ring2(2);
  CHECK(ideal_equal(bracket_power(Ideal::maximal(r2), 4), I(r2, {"x^4", "y^4"})));
  auto r3 = ring2(3);
  auto b = bracket_power(I(r3, {"x + y"}), 3);
  CHECK(b.generators().front() == P(r3, "x^3 + y^3"));
  CHECK(bracket_power(Ideal::zero(r3), 3).is_zero());
  CHECK(kind_of([&] { bracket_power(Ideal::maximal(r3), 6); }) == ErrorKind::QNotPowerOfP);
}

TEST_CASE("frobenius_root examples") {
  auto r2 = ring2(2);
  CHECK(ideal_equal(frobenius_root(I(r2, {"x^2*y^2 + x^5 + y^5"}), 2), I(r2, {"x*y", "x^2", "y^2"})));
  auto r3 = ring2(3);
  CHECK(ideal_equal(frobenius_root(I(r3, {"x^9"}), 9), I(r3, {"x"})));
  CHECK(ideal_equal(frobenius_root(bracket_power(Ideal::maximal(r3), 9), 9), Ideal::maximal(r3)));
}

TEST_CASE("groebner examples") {
  auto r = ring2(5);
  auto lex = groebner(I(r, {"x", "y"}), MonomialOrder::lex()).groebner_basis(MonomialOrder::lex());
  REQUIRE(lex->elements().size() == 2);
  auto single = I(r, {"x^2 - y"}).groebner_basis(MonomialOrder::lex());
  REQUIRE(single->elements().size() == 1);
  CHECK(single->elements().front() == P(r, "x^2 - y"));
  auto gr = I(r, {"x*y", "x^2 + x*y"}).groebner_basis();
  REQUIRE(gr->elements().size() == 2);
  CHECK(gr->elements()[0] == P(r, "x^2"));
  CHECK(gr->elements()[1] == P(r, "x*y"));
}

TEST_CASE("groebner basis is reduced and reproduces membership under every order") {
  std::mt19937_64 rng(3);
  auto r = PolyRing::make(3, {"x", "y", "z"});
  for (int i = 0; i < 15; ++i) {
    std::vector<SparsePoly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testgen::random_poly(rng, r, 3, 3));
    Ideal ideal(r, gens);
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
      auto gb = ideal.groebner_basis(order);
      const auto& leads = gb->leading_monomials();
      for (std::size_t a = 0; a < leads.size(); ++a) {
        for (std::size_t b = 0; b < leads.size(); ++b) {
          if (a != b) CHECK(!leads[a].divides(leads[b]));
        }
      }
      for (const auto& g : gens) CHECK(gb->normal_form(g).is_zero());
      for (const auto& e : gb->elements()) {
        // Tails are reduced: no term other than the lead is divisible by a lead.
        for (const auto& t : e.terms()) {
          int hits = 0;
          for (const auto& l : leads) hits += l.divides(t.monomial) ? 1 : 0;
          if (!(t.monomial == leads[&e - &gb->elements()[0]])) CHECK(hits == 0);
        }
      }
    }
  }
}

TEST_CASE("normal_form examples") {
  auto r = ring2(5);
  CHECK(normal_form(P(r, "y^5"), I(r, {"x^2", "x*y", "y^2"})).is_zero());
  CHECK(I(r, {"x^2 - y"}).groebner_basis(MonomialOrder::lex())->normal_form(P(r, "x^4")) == P(r, "y^2"));
  CHECK(normal_form(P(r, "x + y + 1"), Ideal::maximal(r)) == P(r, "1"));
}

TEST_CASE("ideal_equal examples") {
  auto r = ring2(3);
  CHECK(ideal_equal(I(r, {"x", "y"}), I(r, {"x + y", "y"})));
  CHECK(!ideal_equal(I(r, {"x^2"}), I(r, {"x"})));
  CHECK(ideal_equal(Ideal::zero(r), Ideal::zero(r)));
  CHECK(kind_of([&] { ideal_equal(Ideal::zero(r), Ideal::zero(ring2(5))); }) == ErrorKind::RingMismatch);
}

TEST_CASE("colon_principal examples") {
  auto r = ring2(3);
  CHECK(ideal_equal(colon_principal(I(r, {"x^3", "y^3"}), P(r, "x^2*y")), I(r, {"x", "y^2"})));
  auto J = I(r, {"x^2 + y", "x*y^2"});
  CHECK(ideal_equal(colon_principal(J, P(r, "1")), J));
  CHECK(ideal_equal(colon_principal(I(r, {"x^9"}), P(r, "x")), I(r, {"x^8"})));
  CHECK(colon_principal(J, P(r, "x^2 + y")).is_proper() == false);
  CHECK(colon_principal(Ideal::zero(r), P(r, "x")).is_zero());
  CHECK(kind_of([&] { colon_principal(J, SparsePoly(r)); }) == ErrorKind::ZeroDivisorArg);
}

TEST_CASE("colon_principal defining property on random inputs") {
  std::mt19937_64 rng(8);
  auto r = ring2(3);
  for (int i = 0; i < 20; ++i) {
    Ideal J(r, {testgen::random_poly(rng, r, 3, 3), testgen::random_poly(rng, r, 3, 3)});
    auto g = testgen::random_poly(rng, r, 3, 2);
    Ideal c = colon_principal(J, g);
    for (const auto& h : c.generators()) CHECK(J.contains(h * g));
    CHECK(c.contains(J));
  }
}

TEST_CASE("quotient_length examples") {
  auto r = ring2(2);
  CHECK(quotient_length(I(r, {"x^2", "x*y", "y^2"})) == Length::finite(3));
  CHECK(quotient_length(Ideal::maximal(r)) == Length::finite(1));
  CHECK(quotient_length(I(r, {"x"})).infinite);
  CHECK(quotient_length(Ideal::unit(r)) == Length::finite(0));
  CHECK(quotient_length(I(r, {"x^4", "y^3", "x^2*y^2"})) == Length::finite(10));
}

TEST_CASE("quotient_dimension examples") {
  auto r = ring2(2);
  CHECK(quotient_dimension(I(r, {"x^2", "x*y", "y^2"})) == 0);
  CHECK(quotient_dimension(I(r, {"x*y"})) == 1);
  CHECK(quotient_dimension(Ideal::zero(r)) == 2);
  CHECK(quotient_dimension(Ideal::unit(r)) == -1);
  auto r3 = PolyRing::make(3, {"x", "y", "z"});
  CHECK(quotient_dimension(Ideal(r3, {parse_polynomial("x*y", r3), parse_polynomial("x*z", r3)})) == 2);
}

TEST_CASE("length_colon_bracket examples") {
  auto r = ring2(3);
  CHECK(length_colon_bracket(P(r, "x^2*y"), 1, 3) == 2);
  CHECK(length_colon_bracket(P(r, "x + y^2"), 0, 9) == 81);
  auto r1 = PolyRing::make(3, {"x"});
  CHECK(length_colon_bracket(parse_polynomial("x", r1), 1, 3) == 2);
}

TEST_CASE("length_colon_bracket guard") {
  auto r = PolyRing::make(2, {"x", "y", "z"});
  const auto saved = max_dense_cells();
  set_max_dense_cells(1000);
  CHECK(kind_of([&] { length_colon_bracket(parse_polynomial("x*y*z", r), 1, 16); }) == ErrorKind::MatrixTooLarge);
  set_max_dense_cells(saved);
  CHECK(length_colon_bracket(parse_polynomial("x*y*z", r), 1, 16) == 15 * 15 * 15);
}

TEST_CASE("rank and Groebner length algorithms agree (q <= 27, n <= 3)") {
  std::mt19937_64 rng(41);
  for (Prime p : {2u, 3u}) {
    for (std::size_t n : {1u, 2u, 3u}) {
      std::vector<std::string> names{"x", "y", "z"};
      names.resize(n);
      auto r = PolyRing::make(p, names);
      for (int i = 0; i < 8; ++i) {
        auto f = testgen::random_poly(rng, r, 3, 3);
        std::uint64_t q = p;
        while (q * p <= (n == 3 ? 9u : 27u) && rng() % 2) q *= p;
        const std::uint64_t a = rng() % (q + 1);
        const auto rank_len = length_colon_bracket(f, a, q);
        const auto gb_len =
            quotient_length(colon_principal(bracket_power(Ideal::maximal(r), q), pow_exact(f, a)));
        CHECK(Length::finite(rank_len) == gb_len);
        if (n <= 2) CHECK(rank_len == oracle::colon_length(f, a, q));
      }
    }
  }
}

TEST_CASE("frobenius_root of a bracket power returns the ideal") {
  std::mt19937_64 rng(43);
  auto r = ring2(3);
  for (int i = 0; i < 15; ++i) {
    Ideal principal(r, {testgen::random_poly(rng, r, 4, 4)});
    CHECK(ideal_equal(frobenius_root(bracket_power(principal, 3), 3), principal));
    std::vector<SparsePoly> monos;
    for (int k = 0; k < 3; ++k) monos.push_back(SparsePoly::monomial(r, Monomial{rng() % 5, rng() % 5}));
    Ideal mono(r, monos);
    CHECK(ideal_equal(frobenius_root(bracket_power(mono, 9), 9), mono));
  }
}

TEST_CASE("frobenius_root is minimal") {
  std::mt19937_64 rng(47);
  for (Prime p : {2u, 3u}) {
    auto r = ring2(p);
    for (int i = 0; i < 15; ++i) {
      auto g = testgen::random_poly(rng, r, 5, 7);
      const std::uint64_t q = p;
      auto parts = frobenius_decompose(g, q);
      Ideal J = frobenius_root(Ideal::principal(g), q);
      CHECK(bracket_power(J, q).contains(g));
      for (const auto& [b, h] : parts) {
        std::vector<SparsePoly> others;
        for (const auto& [b2, h2] : parts) {
          if (!(b2 == b)) others.push_back(h2);
        }
        Ideal Jp(r, others);
        if (!Jp.contains(h)) CHECK(!bracket_power(Jp, q).contains(g));
      }
    }
  }
}

TEST_CASE("normal form agrees with dense membership for m-primary ideals") {
  std::mt19937_64 rng(53);
  for (Prime p : {2u, 3u}) {
    auto r = ring2(p);
    const std::uint64_t Q = p == 2 ? 4 : 3;
    for (int i = 0; i < 15; ++i) {
      std::vector<SparsePoly> gens{SparsePoly::monomial(r, Monomial{Q, 0}), SparsePoly::monomial(r, Monomial{0, Q}),
                                   testgen::random_poly(rng, r, 3, 3)};
      Ideal J(r, gens);
      for (int k = 0; k < 5; ++k) {
        auto h = testgen::random_poly(rng, r, 4, 3, false);
        CHECK(normal_form(h, J).is_zero() == oracle::member(h, gens, Q));
      }
    }
  }
}

TEST_CASE("monomial_is_radical examples") {
  auto r = ring2(2);
  CHECK(!monomial_is_radical(I(r, {"x^2", "x*y", "y^2"})));
  CHECK(monomial_is_radical(I(r, {"x*y"})));
  CHECK(monomial_is_radical(Ideal::maximal(r)));
  CHECK(monomial_is_radical(I(r, {"x", "x^2*y^3"})));
  CHECK(kind_of([&] { monomial_is_radical(I(r, {"x + y"})); }) == ErrorKind::NotMonomialIdeal);
}

TEST_CASE("canonical ideal rendering") {
  auto r = ring2(2);
  CHECK(I(r, {"y^2", "x*y", "x^2"}).to_string() == "<x^2, x*y, y^2>");
  CHECK(Ideal::zero(r).to_string() == "<0>");
  CHECK(Ideal::unit(r).to_string() == "<1>");
}

TEST_CASE("concurrent readers share one Groebner cache safely") {
  auto r = PolyRing::make(3, {"x", "y", "z"});
  Ideal J(r, {parse_polynomial("x^3 + y*z", r), parse_polynomial("y^3 - x*z", r), parse_polynomial("z^3 + x*y", r)});
  std::vector<std::string> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] { seen[t] = J.to_string(); });
  }
  for (auto& th : threads) th.join();
  for (const auto& s : seen) CHECK(s == seen.front());
  CHECK(J.has_cached_basis());
}
