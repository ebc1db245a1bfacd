// Copyright 2026 The holochip Authors
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

#include "holochip/adiabatic.hpp"
#include "holochip/entanglement.hpp"
#include "holochip/holonomy.hpp"
#include "holochip/open_system.hpp"

namespace {

using namespace holochip;

void BM_FockLift(benchmark::State& state) {
  const int photons = static_cast<int>(state.range(0));
  const holonomy::Phase phi{0.37};
  const CMatrix u2 = holonomy::single_mode_rotation(phi).cast<Complex>();
  for (auto _ : state) benchmark::DoNotOptimize(holonomy::fock_lift(u2, photons));
}
BENCHMARK(BM_FockLift)->DenseRange(1, 6);

void BM_MaxEntropyOverPhase(benchmark::State& state) {
  const int photons = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(holonomy::max_entropy_over_phase(photons, 0));
}
BENCHMARK(BM_MaxEntropyOverPhase)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_LogNegativity(benchmark::State& state) {
  const auto rho = open_system::holonomic_qutrit_state();
  for (auto _ : state) benchmark::DoNotOptimize(entanglement::log_negativity(rho));
}
BENCHMARK(BM_LogNegativity);

void BM_EvolveLoss(benchmark::State& state) {
  const auto rho = open_system::holonomic_qutrit_state();
  const open_system::LossConfig cfg{1.0, 2, 10.0, 1000};
  for (auto _ : state) benchmark::DoNotOptimize(open_system::evolve(rho, cfg));
}
BENCHMARK(BM_EvolveLoss)->Unit(benchmark::kMillisecond);

void BM_PropagateDefaultSchedule(benchmark::State& state) {
  const auto schedule = adiabatic::default_schedule();
  for (auto _ : state) benchmark::DoNotOptimize(adiabatic::propagate_single_photon(schedule));
}
BENCHMARK(BM_PropagateDefaultSchedule)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
