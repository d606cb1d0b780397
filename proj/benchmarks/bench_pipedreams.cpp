#include <benchmark/benchmark.h>

#include "pipedreams/pipedream.hpp"
#include "pipedreams/schubert.hpp"
#include "pipedreams/symfun.hpp"
#include "pipedreams/weyl.hpp"

using namespace pipedreams;

namespace {

SignedPermutation longest_bc2() { return parse_one_line("-1 -2"); }
SignedPermutation longest_bc3() { return parse_one_line("-1 -2 -3"); }

void BM_enumerate_B(benchmark::State& state) {
  SignedPermutation w = longest_bc2();
  int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_dreams(GroupType::B, w, k));
}
BENCHMARK(BM_enumerate_B)->Arg(2)->Arg(3)->Arg(4);

void BM_enumerate_double_B(benchmark::State& state) {
  SignedPermutation w = longest_bc2();
  int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_dreams(GroupType::B, w, k, true));
}
BENCHMARK(BM_enumerate_double_B)->Arg(2)->Arg(3);

void BM_schubert_dream_sum(benchmark::State& state) {
  SignedPermutation w = longest_bc3();
  for (auto _ : state)
    benchmark::DoNotOptimize(schubert_BCD(GroupType::B, w, 2));
}
BENCHMARK(BM_schubert_dream_sum);

void BM_schubert_via_BH(benchmark::State& state) {
  SignedPermutation w = longest_bc3();
  for (auto _ : state)
    benchmark::DoNotOptimize(schubert_via_BH(GroupType::B, w, 2));
}
BENCHMARK(BM_schubert_via_BH);

void BM_double_schubert(benchmark::State& state) {
  SignedPermutation w = longest_bc2();
  for (auto _ : state)
    benchmark::DoNotOptimize(double_schubert(GroupType::B, w, 2, 1));
}
BENCHMARK(BM_double_schubert);

void BM_kirillov_naruse(benchmark::State& state) {
  SignedPermutation w = parse_one_line("2 -3 1");
  for (auto _ : state) benchmark::DoNotOptimize(kirillov_naruse_B(w));
}
BENCHMARK(BM_kirillov_naruse);

void BM_stanley_F(benchmark::State& state) {
  SignedPermutation w = longest_bc3();
  for (auto _ : state) benchmark::DoNotOptimize(stanley_F(w, 3));
}
BENCHMARK(BM_stanley_F);

void BM_reduce_to_bottom(benchmark::State& state) {
  SignedPermutation w = longest_bc2();
  std::vector<PipeDream> fiber = enumerate_dreams(GroupType::B, w, 3);
  for (auto _ : state)
    for (const PipeDream& d : fiber)
      benchmark::DoNotOptimize(reduce_to_bottom(d));
}
BENCHMARK(BM_reduce_to_bottom);

void BM_divided_difference(benchmark::State& state) {
  Polynomial f = schubert_BCD(GroupType::B, longest_bc2(), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        divided_difference(f, VarFamily::z, Letter::s0(), GroupType::B));
}
BENCHMARK(BM_divided_difference);

}  // namespace

BENCHMARK_MAIN();
