// Copyright 2026 The steinerlab Authors
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

#include "steinerlab/io.hpp"
#include "steinerlab/ops.hpp"
#include "steinerlab/retraction.hpp"
#include "steinerlab/shapes.hpp"
#include "steinerlab/steiner.hpp"

namespace {

using namespace steinerlab;

void BM_CubeByTensor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cube(n));
}
BENCHMARK(BM_CubeByTensor)->DenseRange(2, 7);

void BM_OrientalViaJoin(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oriental_via_join(n));
}
BENCHMARK(BM_OrientalViaJoin)->DenseRange(2, 7);

void BM_JoinPushout(benchmark::State& state) {
  const BasedComplex a = cube(static_cast<int>(state.range(0)));
  const BasedComplex b = oriental(2);
  for (auto _ : state) benchmark::DoNotOptimize(join(a, b));
}
BENCHMARK(BM_JoinPushout)->DenseRange(1, 4);

void BM_IsSteiner(benchmark::State& state) {
  const BasedComplex c = cube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_steiner(c));
}
BENCHMARK(BM_IsSteiner)->DenseRange(3, 6);

void BM_BoundaryDecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boundary_decomposition_check(Family::kCube, n));
}
BENCHMARK(BM_BoundaryDecomposition)->DenseRange(2, 5);

void BM_SectionXi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // Sections are cached after the first call; time the verification.
  (void)section_xi(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_retraction(section_xi(n)));
}
BENCHMARK(BM_SectionXi)->DenseRange(2, 5);

void BM_EmitParse(benchmark::State& state) {
  const BasedComplex c = cube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parse_complex(emit(c)));
}
BENCHMARK(BM_EmitParse)->DenseRange(3, 6);

}  // namespace
BENCHMARK_MAIN();
