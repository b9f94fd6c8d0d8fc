#include <benchmark/benchmark.h>

#include "fptlab/families.hpp"
#include "fptlab/ideals.hpp"
#include "fptlab/parse.hpp"
#include "fptlab/polyring.hpp"
#include "fptlab/testideals.hpp"
#include "fptlab/thresholds.hpp"

using namespace fptlab;

namespace {

SparsePoly cusp(Prime p) { return parse_polynomial("y^2 - x^3", p, std::vector<std::string>{"x", "y"}); }

void BM_pow_truncated(benchmark::State& state) {
  const auto f = parse_polynomial("x^3 + y^3 + z^3 + x*y*z", 7, std::vector<std::string>{"x", "y", "z"});
  const std::uint64_t q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pow_truncated(f, q - 2, q));
}
BENCHMARK(BM_pow_truncated)->Arg(7)->Arg(49)->Arg(343);

void BM_buchberger(benchmark::State& state) {
  auto ring = PolyRing::make(3, {"x", "y", "z"});
  std::vector<SparsePoly> gens{parse_polynomial("x^3*z + x + y^2*z^3", ring),
                               parse_polynomial("2*x^3*y*z + x^2*y^3 + z^3", ring),
                               parse_polynomial("x^3*y^2*z^2 + 2*x*y*z", ring)};
  const auto order = state.range(0) == 0 ? MonomialOrder::grevlex() : MonomialOrder::lex();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ring, gens, order));
}
BENCHMARK(BM_buchberger)->Arg(0)->Arg(1);

void BM_length_colon_bracket(benchmark::State& state) {
  const Prime p = static_cast<Prime>(state.range(0));
  const auto f = cusp(p);
  const std::uint64_t q = static_cast<std::uint64_t>(p) * p;
  for (auto _ : state) benchmark::DoNotOptimize(length_colon_bracket(f, 5 * (q - 1) / 6, q));
}
BENCHMARK(BM_length_colon_bracket)->Arg(7)->Arg(13);

void BM_length_colon_bracket_gf2(benchmark::State& state) {
  const auto f = appendix_instance(2).f;
  const unsigned e = static_cast<unsigned>(state.range(0));
  const std::uint64_t q = std::uint64_t{1} << e;
  for (auto _ : state) benchmark::DoNotOptimize(length_colon_bracket(f, q / 2 - 1, q));
}
BENCHMARK(BM_length_colon_bracket_gf2)->Arg(4)->Arg(6)->Arg(8);

void BM_nu_sequence(benchmark::State& state) {
  const auto f = cusp(7);
  const unsigned e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nu_sequence(f, e));
}
BENCHMARK(BM_nu_sequence)->Arg(2)->Arg(4);

void BM_test_ideal(benchmark::State& state) {
  const auto f = appendix_instance(static_cast<std::uint64_t>(state.range(0))).f;
  for (auto _ : state) benchmark::DoNotOptimize(test_ideal_bms(f, BigRational::of(1, 2)));
}
BENCHMARK(BM_test_ideal)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
