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
#include "qsprep/trees.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsprep {

namespace {

using StatePtr = std::unique_ptr<StateTreeNode>;

StatePtr make_leaf(int level, std::uint64_t index, cplx amp) {
    auto node = std::make_unique<StateTreeNode>();
    node->level = level;
    node->index = index;
    node->mag = std::abs(amp);
    node->arg = std::arg(amp);
    return node;
}

StatePtr combine_pair(int level, StatePtr l, StatePtr r) {
    auto node = std::make_unique<StateTreeNode>();
    node->level = level;
    node->index = l->index >> 1;
    node->mag = std::sqrt(l->mag * l->mag + r->mag * r->mag);
    node->arg = (l->arg + r->arg) / 2.0;
    node->left = std::move(l);
    node->right = std::move(r);
    return node;
}

StatePtr lift_lone(int level, StatePtr child, bool child_is_right) {
    auto node = std::make_unique<StateTreeNode>();
    node->level = level;
    node->index = child->index >> 1;
    node->mag = child->mag;
    node->arg = child->arg / 2.0;
    if (child_is_right) {
        node->right = std::move(child);
    } else {
        node->left = std::move(child);
    }
    return node;
}

// Wrap to the principal value in (-pi, pi].
double principal(double a) {
    double r = std::remainder(a, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) {
        r = std::numbers::pi;
    }
    return r;
}

std::unique_ptr<AngleTreeNode> angle_node(const StateTreeNode& s) {
    auto node = std::make_unique<AngleTreeNode>();
    node->level = s.level;
    node->index = s.index;
    if (s.right && s.mag != 0.0) {
        double ratio = std::min(s.right->mag / s.mag, 1.0);
        node->angle_y = 2.0 * std::asin(ratio);
        node->angle_z = 2.0 * principal(s.right->arg - s.arg);
    }
    if (s.left && !s.left->is_leaf()) {
        node->left = angle_node(*s.left);
    }
    if (s.right && !s.right->is_leaf()) {
        node->right = angle_node(*s.right);
    }
    return node;
}

} // namespace

std::unique_ptr<StateTreeNode> build_state_tree(const AmplitudeVector& v) {
    std::vector<StatePtr> nodes;
    nodes.reserve(v.entries.size());
    for (std::size_t i = 0; i < v.entries.size(); ++i) {
        nodes.push_back(make_leaf(v.n, static_cast<std::uint64_t>(i), v.entries[i]));
    }
    for (int level = v.n - 1; level >= 0; --level) {
        std::vector<StatePtr> parents;
        parents.reserve(nodes.size() / 2);
        for (std::size_t k = 0; k < nodes.size(); k += 2) {
            parents.push_back(combine_pair(level, std::move(nodes[k]), std::move(nodes[k + 1])));
        }
        nodes = std::move(parents);
    }
    return std::move(nodes.front());
}

std::unique_ptr<StateTreeNode> build_sparse_state_tree(const SparseAmplitudeVector& v) {
    std::vector<StatePtr> nodes;
    nodes.reserve(v.entries.size());
    for (const auto& e : v.entries) {
        nodes.push_back(make_leaf(v.n, e.index, e.amp));
    }
    for (int level = v.n - 1; level >= 0; --level) {
        std::vector<StatePtr> parents;
        std::size_t k = 0;
        while (k < nodes.size()) {
            if (nodes[k]->index % 2 == 1) {
                parents.push_back(lift_lone(level, std::move(nodes[k]), true));
                k += 1;
            } else if (k + 1 < nodes.size() && nodes[k + 1]->index == nodes[k]->index + 1) {
                parents.push_back(
                    combine_pair(level, std::move(nodes[k]), std::move(nodes[k + 1])));
                k += 2;
            } else {
                parents.push_back(lift_lone(level, std::move(nodes[k]), false));
                k += 1;
            }
        }
        nodes = std::move(parents);
    }
    return std::move(nodes.front());
}

std::unique_ptr<AngleTreeNode> build_angle_tree(const StateTreeNode& root) {
    return angle_node(root);
}

std::vector<const AngleTreeNode*> left_view(const AngleTreeNode& root) {
    std::vector<const AngleTreeNode*> path;
    const AngleTreeNode* cur = &root;
    while (cur) {
        path.push_back(cur);
        cur = cur->left ? cur->left.get() : cur->right.get();
    }
    return path;
}

int tree_height(const AngleTreeNode& root) {
    return static_cast<int>(left_view(root).size());
}

bool is_full_tree(const AngleTreeNode& root) {
    int n = tree_height(root);
    bool full = true;
    auto walk = [&](auto&& self, const AngleTreeNode& node) -> void {
        if (node.level < n - 1) {
            if (!node.left || !node.right) {
                full = false;
                return;
            }
            self(self, *node.left);
            self(self, *node.right);
        }
    };
    walk(walk, root);
    return full;
}

std::size_t node_count(const StateTreeNode& root) {
    std::size_t c = 1;
    if (root.left) {
        c += node_count(*root.left);
    }
    if (root.right) {
        c += node_count(*root.right);
    }
    return c;
}

std::size_t node_count(const AngleTreeNode& root) {
    std::size_t c = 1;
    if (root.left) {
        c += node_count(*root.left);
    }
    if (root.right) {
        c += node_count(*root.right);
    }
    return c;
}

} // namespace qsprep
