// Copyright 2026 The qsci Authors
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

#include <vector>

#include "qsci/circuit.hpp"
#include "qsci/encodings.hpp"
#include "qsci/pde.hpp"
#include "qsci/solvers.hpp"
#include "qsci/subroutines.hpp"

namespace {

void BM_ApplyHadamard(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    qsci::Vector amps = qsci::zero_state(n).amplitudes();
    const auto op = qsci::make_op("h", {n / 2});
    for (auto _ : state) {
        qsci::apply_in_place(amps, n, op);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ApplyHadamard)->DenseRange(10, 20, 5);

void BM_ApplyControlledPhase(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    qsci::Vector amps = qsci::zero_state(n).amplitudes();
    const auto op = qsci::make_op("p", {n - 1}, {0.3}, {0});
    for (auto _ : state) {
        qsci::apply_in_place(amps, n, op);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ApplyControlledPhase)->DenseRange(10, 20, 5);

void BM_Qft(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto circuit = qsci::qft(n);
    const auto initial = qsci::zero_state(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsci::run(circuit, initial));
    }
}
BENCHMARK(BM_Qft)->DenseRange(8, 16, 4);

void BM_SampleBell(benchmark::State &state) {
    qsci::Circuit c(2);
    c.add("h", {0}).add("cx", {0, 1}).measure_all();
    const auto shots = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsci::sample(c, shots, seed++));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleBell)->Arg(1 << 10)->Arg(1 << 16);

void BM_PauliDecompose(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const qsci::Matrix l = qsci::laplacian_1d(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsci::pauli_decompose(l));
    }
}
BENCHMARK(BM_PauliDecompose)->RangeMultiplier(2)->Range(4, 64);

void BM_QlsaChebyshev(benchmark::State &state) {
    qsci::LinearSystemProblem p;
    p.A = qsci::kron_sum(qsci::laplacian_1d(4), 2);
    p.b = qsci::Vector::Ones(p.A.rows());
    p.eps = 1e-4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsci::qlsa_chebyshev(p));
    }
}
BENCHMARK(BM_QlsaChebyshev)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
