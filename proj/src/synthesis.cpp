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
#include "qsprep/synthesis.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

#include "qsprep/errors.hpp"

namespace qsprep {

namespace {

bool any_nonzero(const std::vector<double>& v) {
    return std::any_of(v.begin(), v.end(), [](double x) { return x != 0.0; });
}

void emit_node_rotations(Circuit& c, const AngleTreeNode& v, int qubit) {
    c.ry(v.angle_y, qubit);
    if (v.angle_z != 0.0) {
        c.rz(v.angle_z, qubit);
    }
}

/**
 * Shared two-stage walk. Nodes at levels < d (d = n - split) form stage 2;
 * the sub-trees rooted at level d are stage-1 registers. Qubits are assigned
 * stage-2 nodes first (pre-order from the root), then registers left to
 * right, each along its left-view path. Works unchanged on pruned trees.
 */
struct BidirectionalWalk {
    const AngleTreeNode& root;
    int n;
    int d;
    std::map<std::pair<int, std::uint64_t>, int> qubit_of;
    int width = 0;
    std::vector<std::vector<const AngleTreeNode*>> stage2_levels;
    std::vector<const AngleTreeNode*> subroots;

    BidirectionalWalk(const AngleTreeNode& tree, int split)
        : root(tree), n(tree_height(tree)), d(n - split) {
        stage2_levels.resize(d);
        alloc_stage2(root);
        collect_subroots(root);
        for (const AngleTreeNode* sub : subroots) {
            for (const AngleTreeNode* v : left_view(*sub)) {
                assign(*v);
            }
        }
    }

    int assign(const AngleTreeNode& v) {
        qubit_of[{v.level, v.index}] = width;
        return width++;
    }

    int q(const AngleTreeNode& v) const { return qubit_of.at({v.level, v.index}); }

    void alloc_stage2(const AngleTreeNode& v) {
        if (v.level >= d) {
            return;
        }
        assign(v);
        stage2_levels[v.level].push_back(&v);
        if (v.left) {
            alloc_stage2(*v.left);
        }
        if (v.right) {
            alloc_stage2(*v.right);
        }
    }

    void collect_subroots(const AngleTreeNode& v) {
        if (v.level == d) {
            subroots.push_back(&v);
            return;
        }
        if (v.left) {
            collect_subroots(*v.left);
        }
        if (v.right) {
            collect_subroots(*v.right);
        }
    }

    // Angles of the existing nodes `depth` levels below `v`; absent slots
    // keep angle 0.
    void gather(const AngleTreeNode& v, int depth, std::size_t slot,
                std::vector<double>& ys, std::vector<double>& zs) const {
        if (depth == 0) {
            ys[slot] = v.angle_y;
            zs[slot] = v.angle_z;
            return;
        }
        if (v.left) {
            gather(*v.left, depth - 1, slot * 2, ys, zs);
        }
        if (v.right) {
            gather(*v.right, depth - 1, slot * 2 + 1, ys, zs);
        }
    }

    void emit_register(Circuit& c, const AngleTreeNode& sub) const {
        std::vector<const AngleTreeNode*> path = left_view(sub);
        std::vector<int> reg(path.size());
        for (std::size_t r = 0; r < path.size(); ++r) {
            reg[r] = q(*path[r]);
        }
        for (std::size_t r = 0; r < path.size(); ++r) {
            std::vector<double> ys(std::size_t{1} << r, 0.0);
            std::vector<double> zs(std::size_t{1} << r, 0.0);
            gather(sub, static_cast<int>(r), 0, ys, zs);
            if (r == 0) {
                c.ry(ys[0], reg[0]);
                if (zs[0] != 0.0) {
                    c.rz(zs[0], reg[0]);
                }
            } else {
                std::vector<int> controls(reg.begin(), reg.begin() + r);
                c.mux_ry(ys, controls, reg[r]);
                if (any_nonzero(zs)) {
                    c.mux_rz(zs, controls, reg[r]);
                }
            }
        }
    }

    std::vector<int> view_qubits(const AngleTreeNode& v) const {
        std::vector<int> out;
        for (const AngleTreeNode* w : left_view(v)) {
            out.push_back(q(*w));
        }
        return out;
    }

    Circuit run() const {
        Circuit c;
        c.width = width;
        for (const AngleTreeNode* sub : subroots) {
            emit_register(c, *sub);
        }
        for (int lev = d - 1; lev >= 0; --lev) {
            for (const AngleTreeNode* v : stage2_levels[lev]) {
                emit_node_rotations(c, *v, q(*v));
            }
            for (const AngleTreeNode* v : stage2_levels[lev]) {
                if (v->left && v->right) {
                    cswap_chain(c, q(*v), view_qubits(*v->left), view_qubits(*v->right));
                }
            }
        }
        c.roles.assign(width, QubitRole{});
        std::vector<const AngleTreeNode*> outputs = left_view(root);
        for (std::size_t k = 0; k < outputs.size(); ++k) {
            c.roles[q(*outputs[k])] = QubitRole{true, static_cast<int>(k)};
        }
        return c;
    }
};

Circuit generic_bidirectional(const AngleTreeNode& tree, int split) {
    int n = tree_height(tree);
    if (split < 1 || split > n) {
        throw SplitOutOfRange("split must lie in [1, n]");
    }
    return BidirectionalWalk(tree, split).run();
}

} // namespace

Circuit synth_top_down(const AngleTreeNode& tree) {
    if (!is_full_tree(tree)) {
        throw SparseTreeUnsupported("top-down walk requires the full tree");
    }
    int n = tree_height(tree);
    std::vector<std::vector<double>> ys(n), zs(n);
    for (int lev = 0; lev < n; ++lev) {
        ys[lev].assign(std::size_t{1} << lev, 0.0);
        zs[lev].assign(std::size_t{1} << lev, 0.0);
    }
    // Full tree: node index is the slot within its level.
    auto fill = [&](auto&& self, const AngleTreeNode& v) -> void {
        ys[v.level][v.index] = v.angle_y;
        zs[v.level][v.index] = v.angle_z;
        if (v.left) {
            self(self, *v.left);
        }
        if (v.right) {
            self(self, *v.right);
        }
    };
    fill(fill, tree);

    Circuit c;
    c.width = n;
    c.ry(ys[0][0], 0);
    if (zs[0][0] != 0.0) {
        c.rz(zs[0][0], 0);
    }
    for (int lev = 1; lev < n; ++lev) {
        std::vector<int> controls(lev);
        for (int i = 0; i < lev; ++i) {
            controls[i] = i;
        }
        c.mux_ry(ys[lev], controls, lev);
        if (any_nonzero(zs[lev])) {
            c.mux_rz(zs[lev], controls, lev);
        }
    }
    c.roles.resize(n);
    for (int i = 0; i < n; ++i) {
        c.roles[i] = QubitRole{true, i};
    }
    return c;
}

Circuit synth_bottom_up(const AngleTreeNode& tree) {
    if (!is_full_tree(tree)) {
        throw SparseTreeUnsupported("bottom-up walk requires the full tree");
    }
    int n = tree_height(tree);
    std::map<std::pair<int, std::uint64_t>, int> qubit_of;
    int width = 0;
    std::vector<std::vector<const AngleTreeNode*>> levels(n);
    auto alloc_interior = [&](auto&& self, const AngleTreeNode& v) -> void {
        levels[v.level].push_back(&v);
        if (v.level < n - 1) {
            qubit_of[{v.level, v.index}] = width++;
            self(self, *v.left);
            self(self, *v.right);
        }
    };
    alloc_interior(alloc_interior, tree);
    for (const AngleTreeNode* v : levels[n - 1]) {
        qubit_of[{v->level, v->index}] = width++;
    }

    auto q = [&](const AngleTreeNode& v) { return qubit_of.at({v.level, v.index}); };
    auto spine = [&](const AngleTreeNode& v) {
        std::vector<int> out;
        for (const AngleTreeNode* w = &v; w; w = w->left.get()) {
            out.push_back(q(*w));
        }
        return out;
    };

    Circuit c;
    c.width = width;
    for (const AngleTreeNode* v : levels[n - 1]) {
        emit_node_rotations(c, *v, q(*v));
    }
    for (int lev = n - 2; lev >= 0; --lev) {
        for (const AngleTreeNode* v : levels[lev]) {
            emit_node_rotations(c, *v, q(*v));
        }
        for (const AngleTreeNode* v : levels[lev]) {
            cswap_chain(c, q(*v), spine(*v->left), spine(*v->right));
        }
    }
    c.roles.assign(width, QubitRole{});
    int bit = 0;
    for (const AngleTreeNode* w = &tree; w; w = w->left.get()) {
        c.roles[q(*w)] = QubitRole{true, bit++};
    }
    return c;
}

Circuit synth_bidirectional(const AngleTreeNode& tree, int split) {
    if (!is_full_tree(tree)) {
        throw SparseTreeUnsupported(
            "bidirectional walk requires the full tree; use the sparse walk");
    }
    return generic_bidirectional(tree, split);
}

Circuit synth_sparse_bidirectional(const AngleTreeNode& tree, int split) {
    return generic_bidirectional(tree, split);
}

void cswap_chain(Circuit& c, int control, const std::vector<int>& left_path,
                 const std::vector<int>& right_path) {
    if (left_path.size() != right_path.size() || left_path.empty()) {
        throw LengthMismatch("cswap_chain: paths must have equal nonzero length");
    }
    for (std::size_t i = 0; i < left_path.size(); ++i) {
        c.cswap(control, left_path[i], right_path[i]);
    }
}

} // namespace qsprep
