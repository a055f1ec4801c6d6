// Copyright 2026 The kolmoverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "kolmoverify/bitvm.hpp"
#include "kolmoverify/dist.hpp"
#include "kolmoverify/qsim.hpp"
#include "kolmoverify/rng.hpp"
#include "kolmoverify/samplers.hpp"
#include "kolmoverify/verify.hpp"

namespace {

using namespace kolmoverify;

const samplers::DescribedSampler& Uniform1() {
  static const auto s = samplers::FindSampler(samplers::CorpusV1(), "uniform1");
  return s;
}

void BM_RunVm(benchmark::State& state) {
  Rng rng(1);
  BitTape tape;
  for (int i = 0; i < 64; ++i) tape.push_back(rng.bit());
  for (auto _ : state) benchmark::DoNotOptimize(bitvm::run_vm(tape, {1, 64, 8}));
}
BENCHMARK(BM_RunVm);

void BM_TallyByEnumeration(benchmark::State& state) {
  const unsigned t = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bitvm::TallyByEnumeration({1, t, 2}));
}
BENCHMARK(BM_TallyByEnumeration)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_TallyBySkeleton(benchmark::State& state) {
  const unsigned t = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bitvm::TallyBySkeleton({1, t, 2}));
}
BENCHMARK(BM_TallyBySkeleton)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_UKtCounted(benchmark::State& state) {
  const BitTape x = BitTape::FromString("01101001");
  const unsigned t = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bitvm::uKt_counted(x, t));
}
BENCHMARK(BM_UKtCounted)->Arg(40)->Arg(160);

void BM_UKtUnbounded(benchmark::State& state) {
  Rng rng(2);
  BitTape x;
  for (std::int64_t i = 0; i < state.range(0); ++i) x.push_back(rng.bit());
  for (auto _ : state) benchmark::DoNotOptimize(bitvm::uKt_unbounded(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_UKtUnbounded)->RangeMultiplier(16)->Range(256, 65536)->Complexity(benchmark::oN);

void BM_Simulate(benchmark::State& state) {
  const auto c = qsim::ParseCircuitText("q 4\nh 0\nh 1\nt 1\ncx 0 2\nh 3\ncx 3 1\nend");
  for (auto _ : state) benchmark::DoNotOptimize(qsim::simulate(c, 4));
}
BENCHMARK(BM_Simulate);

void BM_SampleBatch(benchmark::State& state) {
  Rng rng(3);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Uniform1().SampleBatchOf(n, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleBatch)->Arg(2155)->Arg(65536);

void BM_VerHonest(benchmark::State& state) {
  const auto cfg = verify::VerConfig::Defaults(static_cast<unsigned>(state.range(0)), 1, 0.25);
  verify::OracleSpec ms;
  verify::OracleSpec as;
  as.target = verify::OracleTarget::kProbability;
  as.contract = verify::Contract::kOneSided;
  as.delta = 0.01;
  as.sampler = Uniform1();
  const auto M = verify::make_oracle(ms);
  const auto A = verify::make_oracle(as);
  Rng rng(4);
  std::uint64_t nonce = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const auto batch = Uniform1().SampleBatchOf(cfg.s, rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(verify::ver(batch, Uniform1(), cfg, M, A, ++nonce));
  }
}
BENCHMARK(BM_VerHonest)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_TvDistance(benchmark::State& state) {
  const auto base = samplers::FindSampler(samplers::CorpusV1(), "uniform8");
  const auto a = base.exact_distribution();
  const auto b = samplers::prg_stretch(base, 4).exact_distribution();
  for (auto _ : state) benchmark::DoNotOptimize(tv_distance(a, b));
}
BENCHMARK(BM_TvDistance);

}  // namespace

BENCHMARK_MAIN();
