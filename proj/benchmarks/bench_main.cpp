/* Copyright 2026 the knzero authors
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

// Each iteration rebuilds its tables from scratch, so the numbers report
// cold-cache construction plus one computation, not memoized lookups.

#include <memory>

#include <benchmark/benchmark.h>

#include "kn/basis.hpp"
#include "kn/cocycle.hpp"
#include "kn/liealgebra.hpp"
#include "kn/modules.hpp"
#include "kn/sugawara.hpp"

namespace {

kn::PointConfig four_points() {
  return kn::PointConfig(
      {kn::Point(kn::Rat(0)), kn::Point(kn::Rat(1))},
      {kn::Point(kn::Rat(2)), kn::Point::infinity()});
}

void BM_ClassicalBasisElement(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    kn::KNBasisTable table(kn::PointConfig::classical());
    benchmark::DoNotOptimize(table.element(kn::KNIndex{0, degree, 1}));
  }
}

void BM_FourPointBasisElement(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    kn::KNBasisTable table(four_points());
    benchmark::DoNotOptimize(table.element(kn::KNIndex{-1, degree, 2}));
  }
}

void BM_FourPointBracketConstants(benchmark::State& state) {
  for (auto _ : state) {
    kn::KNBasisTable table(four_points());
    benchmark::DoNotOptimize(
        table.bracket_constants(kn::DegLabel{2, 1}, kn::DegLabel{-1, 2}));
  }
}

void BM_FourPointDualityPairing(benchmark::State& state) {
  for (auto _ : state) {
    kn::KNBasisTable table(four_points());
    benchmark::DoNotOptimize(table.duality_pairing(kn::KNIndex{0, 3, 1},
                                                   kn::KNIndex{1, -3, 1}));
  }
}

void BM_ClassicalCocycleTable(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  for (auto _ : state) {
    kn::KNBasisTable table(kn::PointConfig::classical());
    benchmark::DoNotOptimize(kn::tabulate_vectorfield_cocycle(
        table, kn::ProjectiveConnection::zero(), {-half, half}));
  }
}

void BM_VacuumModuleStraightening(benchmark::State& state) {
  for (auto _ : state) {
    kn::KNBasisTable table(kn::PointConfig::classical());
    const kn::FinLieAlgebra g = kn::FinLieAlgebra::sl(2);
    kn::VacuumModule mod(table, g, kn::Rat(1), 4);
    kn::ModuleVec v = kn::ModuleVec::vacuum();
    for (int d : {-2, -1, -1})
      v = mod.apply(kn::AffineGenerator{0, d, 1}, v);
    v = mod.apply(kn::AffineGenerator{1, 3, 1}, v);
    benchmark::DoNotOptimize(v);
  }
}

void BM_SugawaraModeOnVacuum(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    kn::KNBasisTable table(kn::PointConfig::classical());
    const kn::FinLieAlgebra g = kn::FinLieAlgebra::sl(2);
    auto mod = std::make_shared<kn::VacuumModule>(table, g, kn::Rat(1), 4);
    kn::SugawaraContext ctx(table, g, mod);
    benchmark::DoNotOptimize(
        ctx.rescaled_op(degree, 1).apply(kn::ModuleVec::vacuum()));
  }
}

void BM_OscillatorModeDeep(benchmark::State& state) {
  for (auto _ : state) {
    kn::KNBasisTable table(kn::PointConfig::classical());
    const kn::FinLieAlgebra g = kn::FinLieAlgebra::abelian(1);
    auto mod = std::make_shared<kn::FockModule>(12);
    kn::SugawaraContext ctx(table, g, mod);
    kn::ModuleVec v = kn::ModuleVec::vacuum();
    for (int k : {-3, -3, -2})
      v = ctx.rescaled_op(k, 1).apply(v);
    benchmark::DoNotOptimize(v);
  }
}

} // namespace

BENCHMARK(BM_ClassicalBasisElement)->Arg(2)->Arg(8);
BENCHMARK(BM_FourPointBasisElement)->Arg(2)->Arg(6);
BENCHMARK(BM_FourPointBracketConstants);
BENCHMARK(BM_FourPointDualityPairing);
BENCHMARK(BM_ClassicalCocycleTable)->Arg(3)->Arg(6);
BENCHMARK(BM_VacuumModuleStraightening);
BENCHMARK(BM_SugawaraModeOnVacuum)->Arg(-2)->Arg(0);
BENCHMARK(BM_OscillatorModeDeep);

BENCHMARK_MAIN();
