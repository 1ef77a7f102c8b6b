// Parallel kernels against their serial references.

#include "pw/kernels.hpp"
#include "pw/pordering.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace pw;

const POrdering& ordering(long length) {
  static std::map<long, POrdering> cache;
  auto it = cache.find(length);
  if (it == cache.end())
    it = cache.emplace(length, p_ordering(CompactSet::whole(3), length, 24)).first;
  return it->second;
}

std::vector<Rat> points(long length) { return ordering(length).values(); }

template <auto Make>
void BM_make_table(benchmark::State& state) {
  const auto pts = points(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(Make(3, pts, 24));
}

template <auto Rows>
void BM_basis_rows(benchmark::State& state) {
  const auto t = kernels::serial::make_table(3, points(state.range(0)), 24);
  for (auto _ : state)
    benchmark::DoNotOptimize(Rows(t, 0, t.size()));
}

template <auto Eval>
void BM_eval_series(benchmark::State& state) {
  const long n = state.range(0);
  const auto t = kernels::serial::make_table(3, points(n), 24);
  std::vector<Int> coeffs;
  for (long k = 0; k <= n; ++k)
    coeffs.emplace_back((k * 7 + 1) % 50);
  std::vector<Rat> xs;
  for (long x = 0; x < 512; ++x)
    xs.emplace_back(x * 11 + 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(Eval(t, coeffs, xs));
}

template <auto Scores>
void BM_ordering_scores(benchmark::State& state) {
  const auto pts = points(state.range(0));
  std::vector<Rat> cands;
  for (long x = 0; x < 4096; ++x)
    cands.emplace_back(x);
  for (auto _ : state)
    benchmark::DoNotOptimize(Scores(3, pts, cands));
}

} // namespace

BENCHMARK(BM_make_table<pw::kernels::make_table>)->Name("make_table/parallel")->Arg(128)->Arg(512);
BENCHMARK(BM_make_table<pw::kernels::serial::make_table>)->Name("make_table/serial")->Arg(128)->Arg(512);
BENCHMARK(BM_basis_rows<pw::kernels::basis_rows>)->Name("basis_rows/parallel")->Arg(64)->Arg(256);
BENCHMARK(BM_basis_rows<pw::kernels::serial::basis_rows>)->Name("basis_rows/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_eval_series<pw::kernels::eval_series>)->Name("eval_series/parallel")->Arg(64)->Arg(256);
BENCHMARK(BM_eval_series<pw::kernels::serial::eval_series>)->Name("eval_series/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_ordering_scores<pw::kernels::ordering_scores>)->Name("ordering_scores/parallel")->Arg(64)->Arg(256);
BENCHMARK(BM_ordering_scores<pw::kernels::serial::ordering_scores>)->Name("ordering_scores/serial")->Arg(64)->Arg(256);

BENCHMARK_MAIN();
