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
#include <string>
#include <vector>

#include "qsprep/errors.hpp"

namespace qsprep {

enum class GateKind { RY, RZ, CX, CSWAP, MUX_RY, MUX_RZ };

/**
 * @brief One gate of the list IR.
 *
 * RY/RZ: one target, one angle. CX: one control, one target. CSWAP: one
 * control, two swap targets. MUX_RY/MUX_RZ (multiplexed rotations): c ordered
 * controls (first = most significant bit), one target, 2^c angles; angles[j]
 * applies when the controls read j.
 */
struct Gate {
    GateKind kind = GateKind::RY;
    std::vector<int> controls;
    std::vector<int> targets;
    std::vector<double> angles;

    bool operator==(const Gate&) const = default;
};

struct QubitRole {
    bool output = false;
    int bit = -1; // output bit position; bit 0 = most significant

    bool operator==(const QubitRole&) const = default;
};

struct Circuit {
    int width = 0;
    std::vector<Gate> gates;
    std::vector<QubitRole> roles;

    void ry(double theta, int target);
    void rz(double phi, int target);
    void cx(int control, int target);
    void cswap(int control, int a, int b);
    void mux_ry(std::vector<double> angles, std::vector<int> controls, int target);
    void mux_rz(std::vector<double> angles, std::vector<int> controls, int target);
};

/// Qubits a gate touches (controls then targets).
std::vector<int> gate_qubits(const Gate& g);

/// Number of output qubits declared in the roles.
int output_count(const std::vector<QubitRole>& roles);

/**
 * @brief Check structural invariants: qubit ids in range and distinct within
 * each gate, multiplexer angle counts, and output bit positions forming a
 * contiguous [0, n) range with exactly one qubit per position.
 * @throws Error on violation.
 */
void validate(const Circuit& c);

/**
 * @brief Resource metrics.
 *
 * width: qubit count. native_depth: ASAP-scheduled depth of the lowered
 * {RY, RZ, CX} form (gates on disjoint qubits share a layer). cx_count: CX
 * gates after lowering. abstract_stage1_steps: ASAP depth over the
 * pre-lowering rotation/multiplexer gates, unit cost per gate.
 * abstract_stage2_cswap_depth: ASAP depth over the pre-lowering CSWAP gates,
 * unit cost per chain position. abstract_depth: the combined pre-lowering
 * unit count — rotation steps (a multiplexer over c controls counts 2^c)
 * plus the CSWAP-chain depth; this is the figure the closed-form depth
 * prediction approximates.
 */
struct ResourceReport {
    int width = 0;
    long long native_depth = 0;
    long long cx_count = 0;
    long long abstract_stage1_steps = 0;
    long long abstract_stage2_cswap_depth = 0;
    long long abstract_depth = 0;
};

/**
 * @brief Expand high-level gates into the canonical {RY, RZ, CX} set.
 *
 * Plain rotations with angle 0 and multiplexers whose whole angle list is 0
 * are elided. A multiplexer with c >= 1 controls expands to exactly 2^c
 * rotations interleaved with 2^c CX (Gray-code schedule); c = 0 becomes a
 * single rotation. CSWAP(ctl, a, b) expands to CX(b, a) · Toffoli(ctl, a, b)
 * · CX(b, a) with the standard 6-CX Toffoli; the result equals the Fredkin
 * unitary up to a global phase (exact phase is unreachable in this gate set).
 */
Circuit lower(const Circuit& c);

ResourceReport metrics(const Circuit& c);

/**
 * @brief Emit OPENQASM 2.0 text: header, one quantum register q[width], a
 * comment line mapping output bit positions to register indices, then the
 * gates in order. Angles print with 17 significant digits.
 *
 * The circuit must be lowered, unless keep_high_level is set: then CSWAP is
 * emitted through an inline gate definition and multiplexers are expanded to
 * native text.
 * @throws UnloweredGate on a high-level gate without keep_high_level.
 */
std::string export_qasm(const Circuit& c, bool keep_high_level = false);

} // namespace qsprep
