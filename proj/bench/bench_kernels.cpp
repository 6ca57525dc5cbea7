// Copyright 2026 The nc2ent Authors
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


// Serial versus OpenMP timings for the parallel kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "nc2ent/discrete.hpp"
#include "nc2ent/gcnot.hpp"
#include "nc2ent/modesplit.hpp"
#include "nc2ent/random.hpp"
#include "nc2ent/symmetric.hpp"
#include "nc2ent/witness.hpp"

namespace {

using namespace nc2ent;

ClassicalSet random_set(std::size_t d) {
  Rng rng(5);
  std::vector<StateVector> states;
  for (std::size_t k = 0; k < d; ++k) states.push_back(random_state(d, rng));
  return ClassicalSet(states);
}

template <bool Parallel>
void BM_Theorem2(benchmark::State& st) {
  const ClassicalSet cs = random_set(static_cast<std::size_t>(st.range(0)));
  const Conversion conv = make_conversion(cs);
  for (auto _ : st) {
    const auto r = Parallel ? verify_theorem2(cs, conv, 200, 1) : verify_theorem2_serial(cs, conv, 200, 1);
    benchmark::DoNotOptimize(r.passes);
  }
}

template <bool Parallel>
void BM_Sweep(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  std::vector<double> thetas(n), mus(n);
  for (std::size_t k = 0; k < n; ++k) {
    thetas[k] = 0.01 + (std::numbers::pi - 0.02) * static_cast<double>(k) / static_cast<double>(n - 1);
    mus[k] = 0.001 + 0.999 * static_cast<double>(k) / static_cast<double>(n - 1);
  }
  const StateVector zero = StateVector::basis(2, 0);
  for (auto _ : st) {
    const auto s = Parallel ? gcnot::sweep_surface(thetas, mus, zero, false)
                            : gcnot::sweep_surface_serial(thetas, mus, zero, false);
    benchmark::DoNotOptimize(s.rows.size());
  }
}

template <bool Parallel>
void BM_ModeSplit(benchmark::State& st) {
  Rng rng(9);
  const int n = static_cast<int>(st.range(0));
  const sym::SymmetricState coh = sym::coherent_state(sym::haar_random_su(3, rng), n);
  const modesplit::ProtocolConfig cfg{modesplit::Tunneling::from_phase(std::sqrt(0.5)), n / 2, n - n / 2, 4, 3};
  for (auto _ : st) {
    const auto b = Parallel ? modesplit::run_batch(coh, cfg, 200) : modesplit::run_batch_serial(coh, cfg, 200);
    benchmark::DoNotOptimize(b.summary.successes);
  }
}

template <bool Parallel>
void BM_ProductMin(benchmark::State& st) {
  const auto d = static_cast<std::size_t>(st.range(0));
  Rng rng(13);
  const witness::Witness w = witness::swap_style_witness(d, d, random_state(d * d, rng));
  for (auto _ : st) {
    const double v = Parallel ? witness::min_product_expectation(w, d, d, 5000, 2)
                              : witness::min_product_expectation_serial(w, d, d, 5000, 2);
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK(BM_Theorem2<false>)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Theorem2<true>)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<false>)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<true>)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModeSplit<false>)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModeSplit<true>)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductMin<false>)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductMin<true>)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
