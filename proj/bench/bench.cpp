// Copyright 2026 The vlab Authors
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

// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "vlab/bestapprox/search.hpp"
#include "vlab/paramgeom/minima.hpp"

namespace vlab {
namespace {

const RealSource& CubeRoot() {
  static const RealSource src(RealSpec::Parse("cbrt:2"));
  return src;
}

const RealSource& EulerE() {
  static const RealSource src(RealSpec::Parse("const:e"));
  return src;
}

void BM_ScreenShell(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const long h = state.range(1);
  const Execution ex = state.range(2) ? Execution::kParallel : Execution::kSerial;
  const ScreeningContext ctx(EulerE(), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScreenShell(ctx, h, 1e300L, ex));
  }
  state.SetLabel(state.range(2) ? "parallel" : "serial");
}
BENCHMARK(BM_ScreenShell)
    ->Args({2, 400, 0})
    ->Args({2, 400, 1})
    ->Args({3, 40, 0})
    ->Args({3, 40, 1})
    ->Unit(benchmark::kMillisecond);

void BM_Sequence(benchmark::State& state) {
  SearchOptions opt;
  opt.execution = state.range(2) ? Execution::kParallel : Execution::kSerial;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        BestApproxSequence(EulerE(), static_cast<int>(state.range(0)), state.range(1), opt));
  }
  state.SetLabel(state.range(2) ? "parallel" : "serial");
}
BENCHMARK(BM_Sequence)
    ->Args({2, 300, 0})
    ->Args({2, 300, 1})
    ->Args({3, 40, 0})
    ->Args({3, 40, 1})
    ->Unit(benchmark::kMillisecond);

void BM_MinPolyOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        MinPolyAtHeight(EulerE(), static_cast<int>(state.range(0)), state.range(1)));
  }
}
BENCHMARK(BM_MinPolyOracle)->Args({2, 300})->Args({3, 40})->Unit(benchmark::kMillisecond);

// range(2): 0 serial enumeration, 1 parallel enumeration, 2 box reference.
void BM_Minima(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double q = static_cast<double>(state.range(1));
  const RealSource& src = n == 2 ? CubeRoot() : EulerE();
  MinimaOptions opt;
  opt.execution = state.range(2) == 1 ? Execution::kParallel : Execution::kSerial;
  for (auto _ : state) {
    if (state.range(2) == 2) {
      benchmark::DoNotOptimize(SuccessiveMinimaReference(src, n, q, opt));
    } else {
      benchmark::DoNotOptimize(SuccessiveMinimaExact(src, n, q, opt));
    }
  }
  static const char* labels[] = {"serial", "parallel", "reference"};
  state.SetLabel(labels[state.range(2)]);
}
BENCHMARK(BM_Minima)
    ->Args({2, 12, 0})
    ->Args({2, 12, 1})
    ->Args({2, 12, 2})
    ->Args({3, 6, 0})
    ->Args({3, 6, 1})
    ->Args({3, 6, 2})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vlab

BENCHMARK_MAIN();
