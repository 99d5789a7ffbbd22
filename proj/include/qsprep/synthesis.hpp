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

#include <vector>

#include "qsprep/circuit.hpp"
#include "qsprep/trees.hpp"

namespace qsprep {

/**
 * @brief Sequential walk over a full angle tree of height n. One qubit per
 * level; the root gets plain RY (and RZ when its z-angle is nonzero), each
 * deeper level v gets a multiplexed RY (and RZ when any z-angle at that level
 * is nonzero) targeting qubit v, controlled by qubits 0..v-1 with the angle
 * list in node-index order. All n qubits are outputs, root = bit 0 (most
 * significant). Throws SparseTreeUnsupported on a pruned tree.
 */
Circuit synth_top_down(const AngleTreeNode& tree);

/**
 * @brief Parallel walk over a full angle tree: one qubit per node (2^n - 1
 * total), allocated interior-first in pre-order from the root, then the
 * bottom level left to right. Bottom-level rotations come first; each higher
 * level then emits its nodes' rotations followed by controlled-swap chains
 * that pair the left-spine qubits of the two child subtrees. Outputs are the
 * root's left-spine qubits. Throws SparseTreeUnsupported on a pruned tree.
 */
Circuit synth_bottom_up(const AngleTreeNode& tree);

/**
 * @brief Split-parameter walk: levels below depth n-s form 2^(n-s) sub-trees
 * loaded sequentially into disjoint s-qubit registers (stage 1); the nodes
 * above the split each get a fresh qubit with rotations plus controlled-swap
 * chains combining their children's left-view paths, emitted level by level
 * from the split upward (stage 2). Width is (s+1)*2^(n-s) - 1; outputs are
 * the root's left-view qubits, top node = bit 0. split = n reproduces
 * synth_top_down gate for gate; split = 1 reproduces synth_bottom_up.
 * Throws SplitOutOfRange unless 1 <= split <= n, SparseTreeUnsupported on a
 * pruned tree (use synth_sparse_bidirectional).
 */
Circuit synth_bidirectional(const AngleTreeNode& tree, int split);

/**
 * @brief Same two-stage walk accepting pruned angle trees: absent nodes
 * allocate no qubits, multiplexer slots for absent nodes hold angle 0, and
 * only two-child nodes emit swap chains. Width never exceeds the dense width
 * for the same (n, split). Output bit positions still span [0, n).
 * Throws SplitOutOfRange unless 1 <= split <= n.
 */
Circuit synth_sparse_bidirectional(const AngleTreeNode& tree, int split);

/**
 * @brief Append one controlled-swap per position, sharing `control` and
 * pairing left_path[i] with right_path[i]. From control a|0> + b|1> and
 * register contents |psi>|phi> this realizes a|psi>|phi> + b|phi>|psi>.
 * Throws LengthMismatch unless the paths have equal nonzero length.
 */
void cswap_chain(Circuit& c, int control, const std::vector<int>& left_path,
                 const std::vector<int>& right_path);

} // namespace qsprep
