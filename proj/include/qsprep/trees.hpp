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
#include <memory>
#include <vector>

#include "qsprep/amplitudes.hpp"

namespace qsprep {

/**
 * @brief Node of the state tree. Levels run from 0 at the root to n at the
 * leaves. The amplitude is stored in polar form: `mag` is the combined child
 * magnitude and `arg` the half-sum phase carried by the node, so the exact
 * combination rules survive round-tripping. Absent children in pruned trees
 * denote amplitude zero.
 */
struct StateTreeNode {
    int level = 0;
    std::uint64_t index = 0;
    double mag = 0.0;
    double arg = 0.0;
    std::unique_ptr<StateTreeNode> left;
    std::unique_ptr<StateTreeNode> right;

    cplx amplitude() const { return std::polar(mag, arg); }
    bool is_leaf() const { return !left && !right; }
};

/**
 * @brief Node of the angle tree, mirroring the state tree minus the leaf
 * level. angle_y in [0, pi] sets magnitudes through y-rotations; angle_z sets
 * phases through z-rotations. Trees are immutable after construction; qubit
 * ids are tracked externally during synthesis.
 */
struct AngleTreeNode {
    int level = 0;
    std::uint64_t index = 0;
    double angle_y = 0.0;
    double angle_z = 0.0;
    std::unique_ptr<AngleTreeNode> left;
    std::unique_ptr<AngleTreeNode> right;
};

/**
 * @brief Build the full state tree of height n: leaves hold the input
 * amplitudes in index order; an interior node combines its children with
 * mag = sqrt(|l|^2 + |r|^2) and arg = (arg_l + arg_r) / 2.
 */
std::unique_ptr<StateTreeNode> build_state_tree(const AmplitudeVector& v);

/**
 * @brief Build the pruned state tree containing only ancestors of nonzero
 * leaves. Pairing per level: a node with odd index and no present sibling
 * below it becomes a lone right child; adjacent (2k, 2k+1) pairs combine as
 * in the dense tree; an even-index node without its sibling becomes a lone
 * left child. Lone children give the parent mag = |child| and
 * arg = arg(child) / 2. Parent index is always child index / 2.
 */
std::unique_ptr<StateTreeNode> build_sparse_state_tree(const SparseAmplitudeVector& v);

/**
 * @brief Derive the angle tree. For a node with a right child and nonzero
 * amplitude, beta = right / parent gives angle_y = 2*asin(|beta|) (input
 * clamped to [0, 1]) and angle_z = 2*arg(beta) with the principal value in
 * (-pi, pi]. A zero-amplitude parent or an absent right child leaves both
 * angles at 0; a lone right child therefore yields angle_y = pi.
 */
std::unique_ptr<AngleTreeNode> build_angle_tree(const StateTreeNode& root);

/**
 * @brief Nodes along the leftmost existing path (left child if present, else
 * right), root first. These carry the circuit's output register, root = most
 * significant bit.
 */
std::vector<const AngleTreeNode*> left_view(const AngleTreeNode& root);

/// Number of levels in the angle tree (= n); equals left_view length.
int tree_height(const AngleTreeNode& root);

/// True when every node above the bottom level has both children.
bool is_full_tree(const AngleTreeNode& root);

/// Total node count (diagnostics for pruning behavior).
std::size_t node_count(const StateTreeNode& root);
std::size_t node_count(const AngleTreeNode& root);

} // namespace qsprep
