#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "slicegb/parallel.hpp"
#include "slicegb/parser.hpp"
#include "slicegb/section.hpp"

using namespace slicegb;

namespace {

std::vector<Rational> nodes(std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < n; ++k) {
    Rational v(static_cast<long>(k) - static_cast<long>(n / 2), static_cast<unsigned long>(1 + k % 3));
    v.canonicalize();
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Rational>> rows(std::size_t count, std::size_t width) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-1000, 1000);
  std::vector<std::vector<Rational>> out(count, std::vector<Rational>(width));
  for (auto& r : out)
    for (auto& v : r) {
      v = Rational(d(rng), static_cast<unsigned long>(1 + std::abs(d(rng)) % 7));
      v.canonicalize();
    }
  return out;
}

void BM_InterpolateSerial(benchmark::State& state) {
  const auto x = nodes(static_cast<std::size_t>(state.range(0)));
  const auto r = rows(static_cast<std::size_t>(state.range(1)), x.size());
  for (auto _ : state) benchmark::DoNotOptimize(interpolate_rows_serial(x, r));
}

void BM_InterpolateParallel(benchmark::State& state) {
  const auto x = nodes(static_cast<std::size_t>(state.range(0)));
  const auto r = rows(static_cast<std::size_t>(state.range(1)), x.size());
  for (auto _ : state) benchmark::DoNotOptimize(interpolate_rows_parallel(x, r, static_cast<int>(state.range(2))));
}

// Reduced slice bases of a curve-like ideal; the per-slice Buchberger runs
// are the parallel unit.
void BM_SliceBases(benchmark::State& state) {
  const Ring r = parse_ring("QQ[x,y,z]");
  const std::vector<Polynomial> gens{parse_polynomial(r, "x^3*z - y^2 + x*z^2 - 3"),
                                     parse_polynomial(r, "y^3 - x*z^2 + 2*x*y - z")};
  std::vector<Rational> gammas;
  for (int k = 1; k <= 8; ++k) gammas.emplace_back(k % 2 ? k : -k);
  const SliceFamily s = SliceFamily::axis(r, 2, gammas);
  const TermOrder order = TermOrder::degrevlex(3);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slice_bases(s, gens, order, jobs));
}

}  // namespace

BENCHMARK(BM_InterpolateSerial)->Args({16, 2000})->Args({32, 2000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InterpolateParallel)
    ->Args({16, 2000, 2})
    ->Args({16, 2000, 4})
    ->Args({32, 2000, 2})
    ->Args({32, 2000, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_SliceBases)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
