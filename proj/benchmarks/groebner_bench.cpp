#include <benchmark/benchmark.h>

#include <random>

#include "jetmult/groebner.hpp"
#include "jetmult/length_oracle.hpp"

namespace {

using namespace jetmult;

Polynomial v(std::uint32_t b) { return Polynomial::variable(JetVar(b, 0)); }

// Dense quadrics in n variables with small integer coefficients.
std::vector<Polynomial> quadrics(std::uint32_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::vector<Polynomial> gens;
  for (std::uint32_t k = 0; k < n; ++k) {
    Polynomial p;
    for (std::uint32_t i = 1; i <= n; ++i)
      for (std::uint32_t j = i; j <= n; ++j) p = p + Polynomial(coeff(rng)) * v(i) * v(j);
    gens.push_back(p);
  }
  return gens;
}

void BM_BuchbergerQuadrics(benchmark::State& state) {
  const auto gens = quadrics(static_cast<std::uint32_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::buchberger(gens));
}
BENCHMARK(BM_BuchbergerQuadrics)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LocalLength(benchmark::State& state) {
  // (x^2 + y^3, xy) has length 5 at the origin.
  const std::vector<Polynomial> gens{v(1) * v(1) + v(2) * v(2) * v(2), v(1) * v(2)};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::local_length_at_origin(gens));
}
BENCHMARK(BM_LocalLength);

void BM_NormalForm(benchmark::State& state) {
  const auto G = oracle::buchberger(quadrics(3, 11));
  Polynomial p = Polynomial(1);
  for (std::uint32_t i = 1; i <= 3; ++i) p = p * (v(i) + Polynomial(static_cast<long>(i)));
  p = p * p;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::normal_form(p, G));
}
BENCHMARK(BM_NormalForm);

}  // namespace
