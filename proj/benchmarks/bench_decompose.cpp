/*
 * Copyright 2026 The mecdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "mecdec/generators.hpp"
#include "mecdec/mec_engine.hpp"
#include "mecdec/oracle.hpp"

using namespace mecdec;

namespace {

template <Algorithm A, BackendKind B>
void BM_ChainOfCycles(benchmark::State& state) {
  const auto mdp = chain_of_cycles(static_cast<std::size_t>(state.range(0)), 4);
  std::uint64_t ops = 0;
  for (auto _ : state) {
    auto r = decompose_with_stats(mdp, A, B);
    ops = r.stats.symbolic_ops();
    benchmark::DoNotOptimize(r.result);
  }
  state.counters["states"] = static_cast<double>(mdp.num_states());
  state.counters["symbolic_ops"] = static_cast<double>(ops);
}

template <Algorithm A, BackendKind B>
void BM_CrossChain(benchmark::State& state) {
  CrossChainParams p;
  p.num_blocks = static_cast<std::size_t>(state.range(0));
  p.seed = 1;
  const auto mdp = chain_of_sccs_with_cross_edges(p);
  std::uint64_t ops = 0;
  for (auto _ : state) {
    auto r = decompose_with_stats(mdp, A, B);
    ops = r.stats.symbolic_ops();
    benchmark::DoNotOptimize(r.result);
  }
  state.counters["states"] = static_cast<double>(mdp.num_states());
  state.counters["symbolic_ops"] = static_cast<double>(ops);
}

void BM_Oracle(benchmark::State& state) {
  const auto mdp = chain_of_cycles(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_mec_decomp(mdp));
}

}  // namespace

BENCHMARK(BM_ChainOfCycles<Algorithm::kInterleave, BackendKind::kBitset>)->RangeMultiplier(4)->Range(16, 256);
BENCHMARK(BM_ChainOfCycles<Algorithm::kBasic, BackendKind::kBitset>)->RangeMultiplier(4)->Range(16, 256);
BENCHMARK(BM_ChainOfCycles<Algorithm::kInterleave, BackendKind::kBdd>)->RangeMultiplier(4)->Range(16, 256);
BENCHMARK(BM_ChainOfCycles<Algorithm::kBasic, BackendKind::kBdd>)->RangeMultiplier(4)->Range(16, 256);
BENCHMARK(BM_CrossChain<Algorithm::kInterleave, BackendKind::kBdd>)->DenseRange(8, 32, 8);
BENCHMARK(BM_CrossChain<Algorithm::kBasic, BackendKind::kBdd>)->DenseRange(8, 32, 8);
BENCHMARK(BM_Oracle)->RangeMultiplier(4)->Range(16, 256);

BENCHMARK_MAIN();
