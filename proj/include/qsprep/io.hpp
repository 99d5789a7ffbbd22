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

#include <string>
#include <vector>

#include "qsprep/amplitudes.hpp"
#include "qsprep/circuit.hpp"
#include "qsprep/simulator.hpp"
#include "qsprep/trees.hpp"

namespace qsprep {

/**
 * @brief Raw contents of an input file before normalization checks.
 *
 * Dense form: {"amplitudes": [[re, im], ...]}; sparse form:
 * {"n": int, "entries": [{"index": int, "amp": [re, im]}, ...]}. In both
 * forms a real value may be written as a bare number instead of a pair.
 */
struct ParsedInput {
    bool sparse = false;
    std::vector<cplx> dense;          // filled when !sparse
    int n = 0;                        // filled when sparse
    std::vector<SparseEntry> entries; // filled when sparse
};

/// Parse input JSON text; throws Error on malformed shape or values.
ParsedInput parse_input_json(const std::string& text);

/**
 * @brief Circuit serialization: {"width": int, "roles": [{"output": bool,
 * "bit": int}, ...], "gates": [{"kind": str, "controls": [...],
 * "targets": [...], "angles": [...]}, ...]}. Gate kinds use the lowercase
 * names ry, rz, cx, cswap, mux_ry, mux_rz.
 */
std::string circuit_to_json(const Circuit& c, int indent = 2);

/// Inverse of circuit_to_json; the result is validated before returning.
Circuit circuit_from_json(const std::string& text);

/**
 * @brief Debug export of a state tree. Node: {"level": int, "index": int,
 * "amplitude": [re, im], "children": [left | null, right | null]}.
 */
std::string state_tree_to_json(const StateTreeNode& root, int indent = 2);

/**
 * @brief Debug export of an angle tree. Node: {"level": int, "index": int,
 * "angles": [angle_y, angle_z], "children": [left | null, right | null]}.
 */
std::string angle_tree_to_json(const AngleTreeNode& root, int indent = 2);

/// Distribution as a JSON array of probabilities, index order.
std::string distribution_to_json(const Distribution& d);

/// Resource report as a JSON object keyed by metric name.
std::string report_to_json(const ResourceReport& r, int indent = 2);

} // namespace qsprep
