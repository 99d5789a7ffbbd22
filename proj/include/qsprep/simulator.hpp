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
#pragma once

#include <cstdint>
#include <vector>

#include "qsprep/amplitudes.hpp"
#include "qsprep/circuit.hpp"

namespace qsprep {

/**
 * @brief Dense statevector over `width` qubits. Basis index bit (width-1-q)
 * holds qubit q, so qubit 0 is the most significant bit of the basis index.
 */
struct StateVector {
    int width = 0;
    std::vector<cplx> amps;
};

/// Probabilities over output bit patterns, summing to 1.
struct Distribution {
    std::vector<double> probs;
};

/**
 * @brief Kernel backend. Both backends produce bitwise-identical states:
 * every amplitude (or amplitude pair) is updated independently with the same
 * arithmetic, so the OpenMP schedule cannot change results. The serial form
 * is kept as the reference for tests and benchmarks.
 */
enum class SimBackend { parallel, serial_reference };

/// Simulation width cap: QSPREP_MAX_SIM_QUBITS, default 26.
int max_sim_qubits();

/// Apply one gate in place (native and high-level kinds alike).
void apply_gate(StateVector& psi, const Gate& g,
                SimBackend backend = SimBackend::parallel);

/**
 * @brief Run the circuit on |0...0>. High-level gates are applied directly by
 * their defining unitaries.
 * @throws TooWide when c.width exceeds max_sim_qubits().
 */
StateVector simulate(const Circuit& c, SimBackend backend = SimBackend::parallel);

/**
 * @brief Marginal probabilities of the output qubits: probs[p] sums
 * |amplitude|^2 over all ancilla configurations, with p read from the output
 * bit positions (bit 0 = most significant).
 */
Distribution output_marginals(const StateVector& psi, const std::vector<QubitRole>& roles);

/**
 * @brief Draw `shots` categorical samples from |amplitudes|^2 and return
 * normalized counts over output patterns. Deterministic: mt19937_64 seeded
 * with `seed`, uniform doubles u = (rng() >> 11) * 2^-53, inverse-CDF lookup.
 */
Distribution sample(const StateVector& psi, const std::vector<QubitRole>& roles,
                    std::uint64_t shots, std::uint64_t seed);

struct StateDistance {
    double overlap = 0.0;      // |<target|psi>|
    double global_phase = 0.0; // arg <target|psi>
};

/**
 * @brief Overlap and relative phase against a target vector of equal
 * dimension (the state must have no ancillas).
 * @throws DimensionMismatch on size mismatch.
 */
StateDistance state_distance(const StateVector& psi, const AmplitudeVector& target);

/// Mean absolute error between two equal-length distributions.
double mae(const Distribution& est, const Distribution& target);

} // namespace qsprep
