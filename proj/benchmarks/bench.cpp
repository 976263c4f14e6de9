#include <benchmark/benchmark.h>

#include "mica/counterexample.hpp"
#include "mica/groebner.hpp"
#include "mica/textio.hpp"

using namespace mica;

namespace {

IdealGens counterexample_ideal() {
  auto fixture = default_counterexample();
  auto ctx = make_context(fixture.vars);
  Field q = Field::rationals();
  std::vector<Polynomial> gens;
  for (const auto& s : fixture.prime_gens) {
    gens.push_back(parse_polynomial(s, ctx, q, MonomialOrder::GrevLex));
  }
  return IdealGens(ctx, q, std::move(gens));
}

MonomialIdeal counterexample_initial() {
  return initial_ideal(
      buchberger(counterexample_ideal(), MonomialOrder::GrevLex));
}

void BM_BuchbergerCounterexample(benchmark::State& state) {
  auto ideal = counterexample_ideal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(ideal, MonomialOrder::GrevLex));
  }
}
BENCHMARK(BM_BuchbergerCounterexample);

void BM_DecomposeInitialIdeal(benchmark::State& state) {
  auto J = counterexample_initial();
  for (auto _ : state) {
    benchmark::DoNotOptimize(irreducible_decomposition(J));
  }
}
BENCHMARK(BM_DecomposeInitialIdeal);

void BM_AssociatedPrimes(benchmark::State& state) {
  auto J = counterexample_initial();
  for (auto _ : state) {
    benchmark::DoNotOptimize(associated_primes(J));
  }
}
BENCHMARK(BM_AssociatedPrimes);

void BM_GinTwistedCubic(benchmark::State& state) {
  auto ctx = make_context({"x1", "x2", "x3", "x4"});
  Field q = Field::rationals();
  std::vector<Polynomial> gens;
  for (const char* s : {"x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"}) {
    gens.push_back(parse_polynomial(s, ctx, q, MonomialOrder::GrevLex));
  }
  IdealGens P(ctx, q, std::move(gens));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gin(P, MonomialOrder::GrevLex, seed++, 2));
  }
}
BENCHMARK(BM_GinTwistedCubic);

}  // namespace

BENCHMARK_MAIN();
