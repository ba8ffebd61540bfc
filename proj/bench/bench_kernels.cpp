// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "flexproofs/algebra.hpp"
#include "flexproofs/parallel.hpp"
#include "flexproofs/pc.hpp"
#include "flexproofs/reference.hpp"

using namespace flexproofs;

namespace {

G2Vec random_g2s(Rng& rng, std::size_t n) {
  G2Vec out(n);
  for (auto& p : out) p = BilinearCtx::get().g2() * rng.scalar();
  return out;
}

void BM_MultiExpG1(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const G1Vec bases = rng.g1s(n);
  const ScalarVec exps = rng.scalars(n);
  for (auto _ : state) benchmark::DoNotOptimize(multi_exp(bases, exps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MultiExpG1Serial(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const G1Vec bases = rng.g1s(n);
  const ScalarVec exps = rng.scalars(n);
  for (auto _ : state) benchmark::DoNotOptimize(reference::multi_exp_serial(bases, exps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MultiExpG2(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const G2Vec bases = random_g2s(rng, n);
  const ScalarVec exps = rng.scalars(n);
  for (auto _ : state) benchmark::DoNotOptimize(multi_exp(bases, exps));
}

void BM_MultiExpG2Serial(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const G2Vec bases = random_g2s(rng, n);
  const ScalarVec exps = rng.scalars(n);
  for (auto _ : state) benchmark::DoNotOptimize(reference::multi_exp_serial(bases, exps));
}

void BM_PairingProd(benchmark::State& state) {
  Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const G1Vec a = rng.g1s(n);
  const G2Vec b = random_g2s(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(pairing_prod(a, b));
}

void BM_PairingProdSerial(benchmark::State& state) {
  Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const G1Vec a = rng.g1s(n);
  const G2Vec b = random_g2s(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(reference::pairing_prod_serial(a, b));
}

void BM_HyperEval(benchmark::State& state) {
  Rng rng(4);
  const auto k = static_cast<unsigned>(state.range(0));
  const PcParams pp = pc_setup(k);
  const MultilinearPoly f(rng.scalars(std::size_t{1} << k));
  for (auto _ : state) benchmark::DoNotOptimize(pc_hyper_eval(pp, f));
}

void BM_PerPointEval(benchmark::State& state) {
  Rng rng(4);
  const auto k = static_cast<unsigned>(state.range(0));
  const PcParams pp = pc_setup(k);
  const MultilinearPoly f(rng.scalars(std::size_t{1} << k));
  for (auto _ : state) {
    for (std::size_t i = 0; i < f.size(); ++i) benchmark::DoNotOptimize(pc_eval(pp, f, bin_point(i, k)));
  }
}

}  // namespace

BENCHMARK(BM_MultiExpG1)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_MultiExpG1Serial)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_MultiExpG2)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_MultiExpG2Serial)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_PairingProd)->RangeMultiplier(4)->Range(16, 256);
BENCHMARK(BM_PairingProdSerial)->RangeMultiplier(4)->Range(16, 256);
BENCHMARK(BM_HyperEval)->DenseRange(4, 8, 2);
BENCHMARK(BM_PerPointEval)->DenseRange(4, 8, 2);

int main(int argc, char** argv) {
  BilinearCtx::get();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::AddCustomContext("threads", std::to_string(num_threads()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
