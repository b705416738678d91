#include <vector>

#include <benchmark/benchmark.h>

#include "ucv/model.hpp"
#include "ucv/rootcheck.hpp"
#include "ucv/search.hpp"
#include "ucv/series.hpp"

namespace {

void BM_Revert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<ucv::Rational> c(n + 1);
  c[1] = 1;
  for (std::size_t k = 2; k <= n; ++k) c[k] = ucv::Rational(static_cast<long>(k % 5) - 2, static_cast<long>(k));
  const ucv::TruncatedSeries s(c);
  for (auto _ : state) benchmark::DoNotOptimize(ucv::revert(s));
}
BENCHMARK(BM_Revert)->Arg(4)->Arg(8)->Arg(16);

void BM_MinRootModulus(benchmark::State& state) {
  const ucv::UnitPolynomial interior({1.0, 0.74, 0.16, 0.42, 0.05});
  for (auto _ : state) benchmark::DoNotOptimize(ucv::min_root_modulus(interior));
}
BENCHMARK(BM_MinRootModulus);

// (1+z)^2 sits on the circle and takes the high-precision path.
void BM_MinRootModulusBoundary(benchmark::State& state) {
  const ucv::UnitPolynomial boundary({1.0, 2.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(ucv::min_root_modulus(boundary));
}
BENCHMARK(BM_MinRootModulusBoundary);

void BM_Report(benchmark::State& state) {
  const auto m = ucv::ClassMember::validate(ucv::Rational(3, 4), {ucv::Rational(3, 5), ucv::Rational(1, 5),
                                                                  ucv::Rational(1, 10), ucv::Rational(1, 30)});
  for (auto _ : state) benchmark::DoNotOptimize(ucv::report(m));
}
BENCHMARK(BM_Report);

void BM_SeriesReport(benchmark::State& state) {
  const auto m = ucv::ClassMember::validate(ucv::Rational(3, 4), {ucv::Rational(3, 5), ucv::Rational(1, 5),
                                                                  ucv::Rational(1, 10), ucv::Rational(1, 30)});
  for (auto _ : state) benchmark::DoNotOptimize(ucv::series_report(m));
}
BENCHMARK(BM_SeriesReport);

void BM_EnumerateFeasible(benchmark::State& state) {
  ucv::SearchConfig cfg;
  cfg.grid_step = ucv::Rational(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ucv::enumerate_feasible(1, cfg).size());
}
BENCHMARK(BM_EnumerateFeasible)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_Optimize(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ucv::optimize(ucv::FunctionalKind::A4, 1, ucv::Direction::Max, {}).searched_value);
}
BENCHMARK(BM_Optimize)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
