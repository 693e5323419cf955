#include <benchmark/benchmark.h>

#include <random>

#include "padic/hensel.hpp"
#include "padic/number.hpp"
#include "padic/oracle.hpp"
#include "padic/solvers.hpp"

using namespace padic;

namespace {

PadicNumber random_unit(std::mt19937_64& rng, Prime p, std::int32_t n) {
  std::vector<std::uint64_t> d(static_cast<std::size_t>(n));
  for (auto& x : d) x = rng() % p.value();
  d[0] = 1 + rng() % (p.value() - 1);
  return PadicNumber::from_unit_digits(p, 0, std::move(d));
}

void BM_mul(benchmark::State& state) {
  Prime p(5);
  std::mt19937_64 rng(1);
  const std::int32_t n = static_cast<std::int32_t>(state.range(0));
  PadicNumber x = random_unit(rng, p, n);
  PadicNumber y = random_unit(rng, p, n);
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, y));
}
BENCHMARK(BM_mul)->Arg(16)->Arg(64)->Arg(256);

void BM_invert_unit(benchmark::State& state) {
  Prime p(7);
  std::mt19937_64 rng(2);
  const std::int32_t n = static_cast<std::int32_t>(state.range(0));
  PadicNumber x = random_unit(rng, p, n);
  for (auto _ : state) benchmark::DoNotOptimize(invert_unit(x));
}
BENCHMARK(BM_invert_unit)->Arg(16)->Arg(64)->Arg(256);

void BM_solve_monomial(benchmark::State& state) {
  Prime p(5);
  PadicNumber a = PadicNumber::from_integer(6, p, 80);
  const std::int32_t N = static_cast<std::int32_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve::solve_monomial(2, a, N));
}
BENCHMARK(BM_solve_monomial)->Arg(8)->Arg(32)->Arg(64);

void BM_oracle_scan(benchmark::State& state) {
  const std::int32_t M = static_cast<std::int32_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        oracle::brute_force_count({-6, 0, 1}, Prime(5), 2, M));
}
BENCHMARK(BM_oracle_scan)->Arg(4)->Arg(6)->Arg(8);

void BM_digit_lift(benchmark::State& state) {
  Prime p(3);
  PadicNumber a = PadicNumber::from_integer(10, p, 80);
  hensel::LiftWitness w = hensel::newton_seed(a, 3, 1);
  PerturbedMonomial F(3, a);
  const std::int32_t N = static_cast<std::int32_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hensel::digit_lift(F, w, N));
}
BENCHMARK(BM_digit_lift)->Arg(8)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
