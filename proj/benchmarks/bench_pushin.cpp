// Copyright 2026 The Pushin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "pushin/automata.hpp"
#include "pushin/badspec.hpp"
#include "pushin/engine.hpp"
#include "pushin/harness.hpp"

using namespace pushin;

namespace {

void BM_CompileBadSpec(benchmark::State& state) {
  const auto maxlen = static_cast<std::size_t>(state.range(0));
  const BadSpec spec = case_badspec(CaseId::case1, maxlen);
  for (auto _ : state) benchmark::DoNotOptimize(compile_badspec(spec));
}
BENCHMARK(BM_CompileBadSpec)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_CountWords(benchmark::State& state) {
  const Nfa bad = compile_badspec(case_badspec(CaseId::case2, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(count_words(bad));
}
BENCHMARK(BM_CountWords)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_BuildGlobal(benchmark::State& state) {
  const SystemDescription sys = build_data_acquisition_system(CommVariant::baseline);
  const Nfa bad = compile_badspec(case_badspec(CaseId::case1, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_m_global(sys, bad));
}
BENCHMARK(BM_BuildGlobal)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_SurvivingSet(benchmark::State& state) {
  const SystemDescription sys = build_data_acquisition_system(CommVariant::baseline);
  const Nfa bad = compile_badspec(case_badspec(CaseId::case1, 10));
  const Nfa m_global = build_m_global(sys, bad);
  std::vector<Alphabet> sigmas;
  for (const auto& b : sys.blackboxes) sigmas.push_back(b.interface.actions());
  const Nfa unit = unit_tsa(initial_auxiliary(m_global, sigmas), sigmas[0]);
  for (auto _ : state) benchmark::DoNotOptimize(surviving_set(*sys.blackboxes[0].oracle, unit));
}
BENCHMARK(BM_SurvivingSet)->Unit(benchmark::kMicrosecond);

void BM_Experiment(benchmark::State& state) {
  const auto id = static_cast<CaseId>(state.range(0));
  const auto maxlen = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(standard_case(id, maxlen)));
}
BENCHMARK(BM_Experiment)
    ->ArgsProduct({{0, 1, 2, 3}, {10, 20}})
    ->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const SystemDescription sys = build_data_acquisition_system(CommVariant::baseline);
  const Nfa bad = compile_badspec(case_badspec(CaseId::case2, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_verdict(sys, bad));
}
BENCHMARK(BM_BruteForce)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
