// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "gor/apolarity.hpp"
#include "gor/kernels.hpp"
#include "gor/rng.hpp"

namespace {

gor::Matrix random_matrix(std::size_t rows, std::size_t cols, const gor::PrimeField& f, std::uint64_t seed) {
  gor::Rng rng(seed);
  gor::Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<gor::Elem>(rng.below(f.modulus()));
  return m;
}

void BM_RrefSerial(benchmark::State& state) {
  const gor::PrimeField f;
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, f, 7);
  for (auto _ : state) benchmark::DoNotOptimize(gor::kernels::serial::rref(m, f));
}

void BM_RrefOmp(benchmark::State& state) {
  const gor::PrimeField f;
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, f, 7);
  for (auto _ : state) benchmark::DoNotOptimize(gor::kernels::omp::rref(m, f));
}

void BM_MultiplySerial(benchmark::State& state) {
  const gor::PrimeField f;
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, n, f, 1);
  const auto b = random_matrix(n, n, f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gor::kernels::serial::multiply(a, b, f));
}

void BM_MultiplyOmp(benchmark::State& state) {
  const gor::PrimeField f;
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, n, f, 1);
  const auto b = random_matrix(n, n, f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gor::kernels::omp::multiply(a, b, f));
}

// Middle catalecticant of a dense form in 4 variables of degree 2k.
void BM_CatalecticantRank(benchmark::State& state) {
  const gor::PrimeField f;
  gor::Rng rng(3);
  const int e = static_cast<int>(state.range(0));
  const auto form = gor::random_dense(rng, 4, e).materialize(f);
  for (auto _ : state) benchmark::DoNotOptimize(gor::rank(gor::catalecticant(form, e / 2), f));
}

}  // namespace

BENCHMARK(BM_RrefSerial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_RrefOmp)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_MultiplySerial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_MultiplyOmp)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_CatalecticantRank)->Arg(8)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
