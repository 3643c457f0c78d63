#include <benchmark/benchmark.h>

#include "arrlab/constructions.hpp"
#include "arrlab/enumeration.hpp"
#include "arrlab/graph.hpp"
#include "arrlab/linalg.hpp"
#include "arrlab/statistics.hpp"

namespace {

void BM_EnumeratePlanar(benchmark::State& state) {
  const auto arr = arrlab::build_ao2(static_cast<std::size_t>(state.range(0))).arrangement;
  for (auto _ : state) {
    arrlab::ArrangementComplex cx(arr);
    benchmark::DoNotOptimize(cx.cells().size());
  }
}
BENCHMARK(BM_EnumeratePlanar)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_EnumerateSpatial(benchmark::State& state) {
  const auto arr = arrlab::build_ao3(static_cast<std::size_t>(state.range(0))).arrangement;
  for (auto _ : state) {
    arrlab::ArrangementComplex cx(arr);
    benchmark::DoNotOptimize(cx.cells().size());
  }
}
BENCHMARK(BM_EnumerateSpatial)->Arg(7)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_CensusCyclic(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto arr = arrlab::build_cyclic_star(d, 2 * d + 1).arrangement;
  for (auto _ : state) benchmark::DoNotOptimize(arrlab::census(arr).delta);
}
BENCHMARK(BM_CensusCyclic)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto g = arrlab::hypercube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(arrlab::canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 5);

void BM_CanonicalFormProduct(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto g = arrlab::complete_product(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(arrlab::canonical_form(g));
}
BENCHMARK(BM_CanonicalFormProduct)->DenseRange(2, 4);

void BM_Solve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  arrlab::RationalMatrix a(n, n);
  arrlab::RationalVector b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = arrlab::Rational(static_cast<long>(i) + 1, 3);
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = arrlab::Rational(static_cast<long>((i * 7 + j * 3) % 11) - 5, static_cast<long>(j % 4) + 1);
    }
    a(i, i) += arrlab::Rational(20);
  }
  for (auto _ : state) benchmark::DoNotOptimize(arrlab::solve_linear_system(a, b));
}
BENCHMARK(BM_Solve)->Arg(2)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
