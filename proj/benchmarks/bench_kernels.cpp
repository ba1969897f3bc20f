// Copyright 2026 The petzlab Authors
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

#include <random>

#include "petzlab/petzlab.hpp"

namespace {

using namespace petzlab;

ComplexMatrix random_hermitian(int n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  return a + a.adjoint();
}

void BM_EigHermitian(benchmark::State& state) {
  const ComplexMatrix h = random_hermitian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::eig_hermitian(h));
}
BENCHMARK(BM_EigHermitian)->Arg(16)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_TraceNorm(benchmark::State& state) {
  const ComplexMatrix h = random_hermitian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::trace_norm_hermitian(h));
}
BENCHMARK(BM_TraceNorm)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_PetzMap(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const KrausSet ch = amplitude_damping(d, 0.3);
  const DensityMatrix sigma = reference_state(d, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(petz_map(ch, sigma));
}
BENCHMARK(BM_PetzMap)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_RecoveryDistance(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const KrausSet ch = amplitude_damping(d, 0.3);
  const DensityMatrix sigma = DensityMatrix::maximally_mixed(d);
  for (auto _ : state) {
    const KrausSet rec = recovery_composition(petz_map(ch, sigma));
    benchmark::DoNotOptimize(choi_distance(rec, identity_channel(d)));
  }
}
BENCHMARK(BM_RecoveryDistance)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
