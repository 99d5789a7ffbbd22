// Copyright 2026 The qsprep authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Side-by-side timing of the OpenMP kernels and the serial reference. On a
// single-core host the two should be close; more cores should separate them
// above the parallel cutoff.
#include <benchmark/benchmark.h>

#include "qsprep/amplitudes.hpp"
#include "qsprep/analysis.hpp"
#include "qsprep/circuit.hpp"
#include "qsprep/simulator.hpp"
#include "qsprep/synthesis.hpp"
#include "qsprep/trees.hpp"

using namespace qsprep;

namespace {

SimBackend backend_of(benchmark::State& state) {
    return state.range(1) ? SimBackend::parallel : SimBackend::serial_reference;
}

void label(benchmark::State& state) {
    state.SetLabel(state.range(1) ? "parallel" : "serial");
}

StateVector prepared(int width) {
    StateVector psi;
    psi.width = width;
    psi.amps.assign(std::size_t{1} << width, cplx{0.0, 0.0});
    psi.amps[0] = 1.0;
    return psi;
}

void BM_RotationKernel(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    StateVector psi = prepared(width);
    Gate g{GateKind::RY, {}, {width / 2}, {0.3}};
    for (auto _ : state) {
        apply_gate(psi, g, backend_of(state));
        benchmark::DoNotOptimize(psi.amps.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<long long>(psi.amps.size() / 2));
    label(state);
}

void BM_MuxKernel(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    StateVector psi = prepared(width);
    Gate g{GateKind::MUX_RY, {0, 1, 2}, {width / 2},
           {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}};
    for (auto _ : state) {
        apply_gate(psi, g, backend_of(state));
        benchmark::DoNotOptimize(psi.amps.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<long long>(psi.amps.size() / 2));
    label(state);
}

void BM_SwapKernel(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    StateVector psi = prepared(width);
    Gate g{GateKind::CSWAP, {0}, {1, 2}, {}};
    for (auto _ : state) {
        apply_gate(psi, g, backend_of(state));
        benchmark::DoNotOptimize(psi.amps.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<long long>(psi.amps.size()));
    label(state);
}

void BM_FullCircuit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    AmplitudeVector v = random_complex_vector(n, 42);
    auto tree = build_angle_tree(*build_state_tree(v));
    int split = n; // deepest split whose circuit stays simulably narrow
    while (split > 1 && predicted_width(n, split - 1) <= 20) --split;
    Circuit c = lower(synth_bidirectional(*tree, split));
    for (auto _ : state) {
        StateVector psi = simulate(c, backend_of(state));
        benchmark::DoNotOptimize(psi.amps.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<long long>(c.gates.size()));
    label(state);
}

} // namespace

BENCHMARK(BM_RotationKernel)
    ->Args({16, 0})
    ->Args({16, 1})
    ->Args({18, 0})
    ->Args({18, 1})
    ->Args({20, 0})
    ->Args({20, 1});
BENCHMARK(BM_MuxKernel)->Args({18, 0})->Args({18, 1});
BENCHMARK(BM_SwapKernel)->Args({18, 0})->Args({18, 1});
BENCHMARK(BM_FullCircuit)->Args({5, 0})->Args({5, 1})->Args({6, 0})->Args({6, 1});

BENCHMARK_MAIN();
