/*
   Copyright 2026 The matfield authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "matfield/claims.hpp"

namespace {

using namespace matfield;

Matrix denseRational(int rank, long seed) {
    Matrix m(rank);
    long v = seed;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            v = (v * 48271) % 2147483647;
            m.set(i, j, GaussianRational(Rational(v % 19 - 9, v % 7 + 1)));
        }
    return m;
}

void BM_DeterminantBareiss(benchmark::State& state) {
    Matrix m = denseRational(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        auto det = m.determinant();
        benchmark::DoNotOptimize(det);
    }
}
BENCHMARK(BM_DeterminantBareiss)->Arg(4)->Arg(6)->Arg(8);

void BM_MinPoly(benchmark::State& state) {
    Matrix m = denseRational(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) {
        auto p = m.minPoly(FieldMode::Q);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_MinPoly)->Arg(4)->Arg(6);

void BM_ClosureGammaRing(benchmark::State& state) {
    auto [g0, g1, g2, g3] = makeDirac();
    AlgebraSpec spec{"gamma", {g0, g1, g2, g3}, FieldMode::QI, Bracket::Mul};
    for (auto _ : state) {
        auto closure = closeUnder(spec);
        benchmark::DoNotOptimize(closure.basis.dim());
    }
}
BENCHMARK(BM_ClosureGammaRing);

void BM_ClassifyDualPart(benchmark::State& state) {
    auto [I, C, B, A] = quaternionBasis();
    (void)B;
    (void)A;
    AlgebraSpec spec{"{aI+bC}", {I, C}, FieldMode::Q, Bracket::Mul};
    for (auto _ : state) {
        auto cls = classify(spec);
        benchmark::DoNotOptimize(cls.field);
    }
}
BENCHMARK(BM_ClassifyDualPart);

void BM_ClaimSuiteFull(benchmark::State& state) {
    for (auto _ : state) {
        Report r = runAll();
        benchmark::DoNotOptimize(r.mismatches);
    }
}
BENCHMARK(BM_ClaimSuiteFull)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
