#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "socle3/apolarity.hpp"
#include "socle3/deformation.hpp"
#include "socle3/parser.hpp"
#include "socle3/random_cubic.hpp"
#include "socle3/resolution.hpp"
#include "socle3/structure.hpp"

using namespace socle3;

namespace {

Polynomial normal_form(std::size_t n, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return normal_form_dual(random_cubic(n, rng), n, h);
}

void BM_Annihilator(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto F = normal_form(n, n + 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(annihilator(F));
}
BENCHMARK(BM_Annihilator)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BettiExact(benchmark::State& state) {
  const auto h = static_cast<std::size_t>(state.range(0));
  std::string f = "y1^3+y2^3";
  for (std::size_t k = 3; k <= h; ++k) f += "+y" + std::to_string(k) + "^2";
  const auto A = algebra_from_dual(parse_poly(f, VarSpace::Dual, h));
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(A, static_cast<std::size_t>(state.range(1))));
}
BENCHMARK(BM_BettiExact)->Args({3, 6})->Args({4, 6})->Args({5, 6})->Unit(benchmark::kMillisecond);

void BM_BettiPrime(benchmark::State& state) {
  const auto A = algebra_from_dual(normal_form(3, 5, 2));
  ResolutionOptions opts;
  opts.field = FieldMode::PrimeHeuristic;
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(A, static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_BettiPrime)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_LinearCertificate(benchmark::State& state) {
  const auto B = q0(normal_form(4, 4, 3));
  for (auto _ : state) benchmark::DoNotOptimize(linear_betti_certificate(B, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_LinearCertificate)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_StructureLemma(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(4);
  const auto cubic = random_cubic(n, rng);
  const auto sigma = solve_sigma(cubic, n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_structure_lemma(cubic, n, n + 2, sigma));
}
BENCHMARK(BM_StructureLemma)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_FlatFamily(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto cubic = random_cubic(3, rng);
  const FamilySpec spec{3, 4, cubic, solve_sigma(cubic, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(check_flat_family(spec));
}
BENCHMARK(BM_FlatFamily)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
