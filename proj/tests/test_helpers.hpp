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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qsprep/amplitudes.hpp"
#include "qsprep/circuit.hpp"
#include "qsprep/simulator.hpp"

namespace qsprep::testing {

using Matrix = std::vector<std::vector<cplx>>; // row-major, M[row][col]

inline Matrix identity(std::size_t dim) {
    Matrix m(dim, std::vector<cplx>(dim, cplx{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = cplx{1.0, 0.0};
    }
    return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    std::size_t ra = a.size(), ca = a[0].size();
    std::size_t rb = b.size(), cb = b[0].size();
    Matrix m(ra * rb, std::vector<cplx>(ca * cb, cplx{0.0, 0.0}));
    for (std::size_t i = 0; i < ra; ++i) {
        for (std::size_t j = 0; j < ca; ++j) {
            for (std::size_t k = 0; k < rb; ++k) {
                for (std::size_t l = 0; l < cb; ++l) {
                    m[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return m;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size();
    Matrix m(n, std::vector<cplx>(n, cplx{0.0, 0.0}));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return m;
}

// Textbook rotation matrices, written independently of the simulator.
inline Matrix ry_mat(double theta) {
    double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    return {{cplx{c, 0}, cplx{-s, 0}}, {cplx{s, 0}, cplx{c, 0}}};
}

inline Matrix rz_mat(double phi) {
    return {{std::polar(1.0, -phi / 2.0), cplx{0, 0}},
            {cplx{0, 0}, std::polar(1.0, phi / 2.0)}};
}

// Permutation matrix sending basis |i> to |perm[i]>.
inline Matrix perm_mat(const std::vector<std::size_t>& perm) {
    Matrix m(perm.size(), std::vector<cplx>(perm.size(), cplx{0.0, 0.0}));
    for (std::size_t i = 0; i < perm.size(); ++i) {
        m[perm[i]][i] = cplx{1.0, 0.0};
    }
    return m;
}

// Columns of the circuit's unitary, built by running every basis state
// through apply_gate with the serial reference backend.
inline Matrix circuit_unitary(const Circuit& c) {
    std::size_t dim = std::size_t{1} << c.width;
    Matrix m(dim, std::vector<cplx>(dim, cplx{0.0, 0.0}));
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector psi;
        psi.width = c.width;
        psi.amps.assign(dim, cplx{0.0, 0.0});
        psi.amps[col] = cplx{1.0, 0.0};
        for (const auto& g : c.gates) {
            apply_gate(psi, g, SimBackend::serial_reference);
        }
        for (std::size_t row = 0; row < dim; ++row) {
            m[row][col] = psi.amps[row];
        }
    }
    return m;
}

// Largest entry difference after removing one global phase (the argument of
// the inner product <b|a>).
inline double phase_aligned_max_diff(const std::vector<cplx>& a,
                                     const std::vector<cplx>& b) {
    cplx ip{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        ip += std::conj(b[i]) * a[i];
    }
    cplx phase = std::abs(ip) > 0.0 ? ip / std::abs(ip) : cplx{1.0, 0.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

inline double phase_aligned_max_diff(const Matrix& a, const Matrix& b) {
    std::vector<cplx> fa, fb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        fa.insert(fa.end(), a[i].begin(), a[i].end());
        fb.insert(fb.end(), b[i].begin(), b[i].end());
    }
    return phase_aligned_max_diff(fa, fb);
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

// Largest entry difference with no phase adjustment.
inline double direct_max_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
        }
    }
    return worst;
}

// Eight probabilities used throughout the experiments; amplitudes are their
// square roots.
inline AmplitudeVector experiment8() {
    std::vector<cplx> amps;
    for (double p : {0.03, 0.06, 0.15, 0.05, 0.1, 0.3, 0.2, 0.11}) {
        amps.emplace_back(std::sqrt(p), 0.0);
    }
    return load_vector(amps);
}

inline Distribution probs_of(const AmplitudeVector& v) {
    Distribution d;
    d.probs.resize(v.entries.size());
    for (std::size_t i = 0; i < v.entries.size(); ++i) {
        d.probs[i] = std::norm(v.entries[i]);
    }
    return d;
}

// Random sparse vector: m distinct indices in [0, 2^n), complex normal
// amplitudes, unit norm.
inline SparseAmplitudeVector random_sparse(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> idx;
    while (static_cast<int>(idx.size()) < m) {
        std::uint64_t cand = rng() & ((std::uint64_t{1} << n) - 1);
        bool fresh = true;
        for (std::uint64_t u : idx) {
            fresh = fresh && u != cand;
        }
        if (fresh) {
            idx.push_back(cand);
        }
    }
    std::sort(idx.begin(), idx.end());
    auto uniform = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    };
    std::vector<SparseEntry> entries;
    for (std::uint64_t u : idx) {
        double r = std::sqrt(-2.0 * std::log(uniform()));
        double phi = 2.0 * 3.14159265358979323846 * uniform();
        entries.push_back({u, cplx(r * std::cos(phi), r * std::sin(phi))});
    }
    LoadOptions opt;
    opt.normalize = true;
    return load_sparse(n, entries, opt);
}

} // namespace qsprep::testing
