// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "drwkit/cartier.hpp"
#include "drwkit/fp_linalg.hpp"
#include "drwkit/pdim.hpp"
#include "drwkit/symbols.hpp"

using namespace drwkit;

namespace {

FpMatrix random_matrix(std::size_t n, unsigned p) {
  std::mt19937 rng(static_cast<unsigned>(n));
  std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
  FpMatrix m(p, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = entry(rng);
  return m;
}

void BM_rref_serial(benchmark::State& state) {
  FpMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref_serial(m));
}

void BM_rref_parallel(benchmark::State& state) {
  FpMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref_parallel(m));
}

void BM_cartier_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cartier::verify_cartier_iso({3, 2}, 1, state.range(0)));
}

void BM_cartier_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cartier::verify_cartier_iso_parallel({3, 2}, 1, state.range(0)));
}

void BM_steinberg_serial(benchmark::State& state) {
  auto units = symbols::steinberg_units(3);
  for (auto _ : state) benchmark::DoNotOptimize(symbols::steinberg_sweep_serial(units, {1, 2, 3}));
}

void BM_steinberg_parallel(benchmark::State& state) {
  auto units = symbols::steinberg_units(3);
  for (auto _ : state) benchmark::DoNotOptimize(symbols::steinberg_sweep_parallel(units, {1, 2, 3}));
}

std::vector<FpPoly> pbasis_family() {
  const std::vector<std::string> names{"t", "x"};
  return {FpPoly::parse("t + x^2", 3, names), FpPoly::parse("x", 3, names)};
}

void BM_pbasis_serial(benchmark::State& state) {
  auto family = pbasis_family();
  for (auto _ : state) benchmark::DoNotOptimize(pdim::p_basis_report(family, state.range(0)));
}

void BM_pbasis_parallel(benchmark::State& state) {
  auto family = pbasis_family();
  for (auto _ : state) benchmark::DoNotOptimize(pdim::p_basis_report_parallel(family, state.range(0)));
}

}  // namespace

BENCHMARK(BM_rref_serial)->Arg(64)->Arg(256);
BENCHMARK(BM_rref_parallel)->Arg(64)->Arg(256);
BENCHMARK(BM_cartier_serial)->Arg(8)->Arg(12);
BENCHMARK(BM_cartier_parallel)->Arg(8)->Arg(12);
BENCHMARK(BM_steinberg_serial);
BENCHMARK(BM_steinberg_parallel);
BENCHMARK(BM_pbasis_serial)->Arg(12)->Arg(18);
BENCHMARK(BM_pbasis_parallel)->Arg(12)->Arg(18);

BENCHMARK_MAIN();
