// Copyright 2026 The spohn-kit Authors
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

#include <map>

#include "spohnkit/classify2x2.hpp"
#include "spohnkit/poly.hpp"
#include "spohnkit/sampler.hpp"
#include "spohnkit/spohn.hpp"
#include "spohnkit/univariate.hpp"

namespace spohnkit {
namespace {

GameForm Pd() { return GameForm::Bimatrix({-2, -10, -1, -5}, {-2, -1, -10, -5}); }
GameForm G114() { return GameForm::Bimatrix({1, 3, 2, 4}, {4, 1, 2, 3}); }

void BM_SpohnSystem(benchmark::State& state) {
  const GameForm g = Pd();
  for (auto _ : state) benchmark::DoNotOptimize(SpohnSystem(g));
}
BENCHMARK(BM_SpohnSystem);

void BM_SliceResultant(benchmark::State& state) {
  // The two PD equations on the slice p11 = 1/3 with p22 eliminated.
  const SpohnSystem sys(Pd());
  const MultiPoly& z = sys.zero();
  std::map<int, MultiPoly> sub;
  sub.emplace(0, MultiPoly::Constant(z, Fraction(1, 3)));
  sub.emplace(3, MultiPoly::Constant(z, Fraction(2, 3)) - MultiPoly::Variable(z, 1) - MultiPoly::Variable(z, 2));
  const MultiPoly f = sys.equations()[0].SubstituteLinear(sub);
  const MultiPoly g = sys.equations()[1].SubstituteLinear(sub);
  for (auto _ : state) benchmark::DoNotOptimize(Resultant(f, g, 2));
}
BENCHMARK(BM_SliceResultant);

void BM_IsolateRealRoots(benchmark::State& state) {
  // (x - 1/7)(x - 2/7)(x - 3/5)(x^2 + 1)
  const UniPoly h = UniPoly(RationalVector{Fraction(-1, 7), 1}) * UniPoly(RationalVector{Fraction(-2, 7), 1}) *
                    UniPoly(RationalVector{Fraction(-3, 5), 1}) * UniPoly(RationalVector{1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(IsolateRealRoots(h, 0, 1));
}
BENCHMARK(BM_IsolateRealRoots);

void BM_Classify(benchmark::State& state) {
  const GameForm g = GameForm::Bimatrix({1, 1, 2, -3}, {-1, 0, 0, 2});
  for (auto _ : state) benchmark::DoNotOptimize(Classify(g));
}
BENCHMARK(BM_Classify);

void BM_SliceSolve(benchmark::State& state) {
  const GameForm g = G114();
  for (auto _ : state) benchmark::DoNotOptimize(SliceSolve(g, Fraction(1, 50)));
}
BENCHMARK(BM_SliceSolve);

void BM_SampleCurve(benchmark::State& state) {
  const GameForm g = Pd();
  SliceConfig cfg;
  cfg.slices = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SampleCurve(g, cfg));
}
BENCHMARK(BM_SampleCurve)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace spohnkit

BENCHMARK_MAIN();
