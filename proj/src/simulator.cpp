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
#include "qsprep/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

namespace qsprep {

namespace {

using u64 = std::uint64_t;

// All kernels update independent amplitudes (or disjoint amplitude pairs)
// with identical arithmetic in both backends, so the parallel form is
// bitwise-identical to the serial reference regardless of thread count.

inline u64 qubit_mask(int width, int q) {
    return u64{1} << (width - 1 - q);
}

// Index of the k-th basis state whose `mask` bit is 0.
inline u64 pair_base(u64 k, u64 mask) {
    return ((k & ~(mask - 1)) << 1) | (k & (mask - 1));
}

inline void rotate_pair(cplx* amps, u64 i0, u64 i1, double co, double si) {
    cplx a0 = amps[i0];
    cplx a1 = amps[i1];
    amps[i0] = co * a0 - si * a1;
    amps[i1] = si * a0 + co * a1;
}

inline void phase_pair(cplx* amps, u64 i0, u64 i1, double pr0, double pi0, double pr1,
                       double pi1) {
    cplx a0 = amps[i0];
    cplx a1 = amps[i1];
    amps[i0] = cplx(a0.real() * pr0 - a0.imag() * pi0, a0.real() * pi0 + a0.imag() * pr0);
    amps[i1] = cplx(a1.real() * pr1 - a1.imag() * pi1, a1.real() * pi1 + a1.imag() * pr1);
}

void ry_serial(cplx* amps, u64 half, u64 m, double co, double si) {
    for (u64 k = 0; k < half; ++k) {
        u64 i0 = pair_base(k, m);
        rotate_pair(amps, i0, i0 | m, co, si);
    }
}

void ry_parallel(cplx* amps, u64 half, u64 m, double co, double si) {
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < static_cast<long long>(half); ++k) {
        u64 i0 = pair_base(static_cast<u64>(k), m);
        rotate_pair(amps, i0, i0 | m, co, si);
    }
}

void rz_serial(cplx* amps, u64 half, u64 m, double pr0, double pi0, double pr1, double pi1) {
    for (u64 k = 0; k < half; ++k) {
        u64 i0 = pair_base(k, m);
        phase_pair(amps, i0, i0 | m, pr0, pi0, pr1, pi1);
    }
}

void rz_parallel(cplx* amps, u64 half, u64 m, double pr0, double pi0, double pr1,
                 double pi1) {
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < static_cast<long long>(half); ++k) {
        u64 i0 = pair_base(static_cast<u64>(k), m);
        phase_pair(amps, i0, i0 | m, pr0, pi0, pr1, pi1);
    }
}

void cx_serial(cplx* amps, u64 half, u64 mt, u64 mc) {
    for (u64 k = 0; k < half; ++k) {
        u64 i0 = pair_base(k, mt);
        if (i0 & mc) {
            std::swap(amps[i0], amps[i0 | mt]);
        }
    }
}

void cx_parallel(cplx* amps, u64 half, u64 mt, u64 mc) {
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < static_cast<long long>(half); ++k) {
        u64 i0 = pair_base(static_cast<u64>(k), mt);
        if (i0 & mc) {
            std::swap(amps[i0], amps[i0 | mt]);
        }
    }
}

void cswap_serial(cplx* amps, u64 dim, u64 mc, u64 ma, u64 mb) {
    for (u64 i = 0; i < dim; ++i) {
        if ((i & mc) && (i & ma) && !(i & mb)) {
            std::swap(amps[i], amps[i ^ ma ^ mb]);
        }
    }
}

void cswap_parallel(cplx* amps, u64 dim, u64 mc, u64 ma, u64 mb) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(dim); ++i) {
        u64 u = static_cast<u64>(i);
        if ((u & mc) && (u & ma) && !(u & mb)) {
            std::swap(amps[u], amps[u ^ ma ^ mb]);
        }
    }
}

struct MuxTables {
    std::vector<int> shifts; // basis-index shifts of the controls, MSB first
    std::vector<double> c0, c1, c2, c3;
};

inline u64 mux_select(u64 base, const std::vector<int>& shifts) {
    u64 j = 0;
    for (int s : shifts) {
        j = (j << 1) | ((base >> s) & 1);
    }
    return j;
}

void mux_ry_serial(cplx* amps, u64 half, u64 m, const MuxTables& t) {
    for (u64 k = 0; k < half; ++k) {
        u64 i0 = pair_base(k, m);
        u64 j = mux_select(i0, t.shifts);
        rotate_pair(amps, i0, i0 | m, t.c0[j], t.c1[j]);
    }
}

void mux_ry_parallel(cplx* amps, u64 half, u64 m, const MuxTables& t) {
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < static_cast<long long>(half); ++k) {
        u64 i0 = pair_base(static_cast<u64>(k), m);
        u64 j = mux_select(i0, t.shifts);
        rotate_pair(amps, i0, i0 | m, t.c0[j], t.c1[j]);
    }
}

void mux_rz_serial(cplx* amps, u64 half, u64 m, const MuxTables& t) {
    for (u64 k = 0; k < half; ++k) {
        u64 i0 = pair_base(k, m);
        u64 j = mux_select(i0, t.shifts);
        phase_pair(amps, i0, i0 | m, t.c0[j], t.c1[j], t.c2[j], t.c3[j]);
    }
}

void mux_rz_parallel(cplx* amps, u64 half, u64 m, const MuxTables& t) {
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < static_cast<long long>(half); ++k) {
        u64 i0 = pair_base(static_cast<u64>(k), m);
        u64 j = mux_select(i0, t.shifts);
        phase_pair(amps, i0, i0 | m, t.c0[j], t.c1[j], t.c2[j], t.c3[j]);
    }
}

// Parallel kernels win only on large states; below the cutoff the serial
// reference runs (results are bitwise-identical either way).
constexpr u64 kParallelCutoff = u64{1} << 13;

MuxTables build_mux_tables(const StateVector& psi, const Gate& g, bool is_y) {
    MuxTables t;
    t.shifts.reserve(g.controls.size());
    for (int c : g.controls) {
        t.shifts.push_back(psi.width - 1 - c);
    }
    std::size_t size = g.angles.size();
    t.c0.resize(size);
    t.c1.resize(size);
    if (!is_y) {
        t.c2.resize(size);
        t.c3.resize(size);
    }
    for (std::size_t j = 0; j < size; ++j) {
        if (is_y) {
            t.c0[j] = std::cos(g.angles[j] / 2.0);
            t.c1[j] = std::sin(g.angles[j] / 2.0);
        } else {
            t.c0[j] = std::cos(-g.angles[j] / 2.0);
            t.c1[j] = std::sin(-g.angles[j] / 2.0);
            t.c2[j] = std::cos(g.angles[j] / 2.0);
            t.c3[j] = std::sin(g.angles[j] / 2.0);
        }
    }
    return t;
}

} // namespace

int max_sim_qubits() {
    const char* env = std::getenv("QSPREP_MAX_SIM_QUBITS");
    if (env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 62) {
            return static_cast<int>(v);
        }
    }
    return 26;
}

void apply_gate(StateVector& psi, const Gate& g, SimBackend backend) {
    cplx* amps = psi.amps.data();
    const u64 dim = psi.amps.size();
    const u64 half = dim >> 1;
    const bool par = backend == SimBackend::parallel && dim >= kParallelCutoff;

    switch (g.kind) {
    case GateKind::RY: {
        u64 m = qubit_mask(psi.width, g.targets[0]);
        double co = std::cos(g.angles[0] / 2.0);
        double si = std::sin(g.angles[0] / 2.0);
        par ? ry_parallel(amps, half, m, co, si) : ry_serial(amps, half, m, co, si);
        break;
    }
    case GateKind::RZ: {
        u64 m = qubit_mask(psi.width, g.targets[0]);
        double pr0 = std::cos(-g.angles[0] / 2.0);
        double pi0 = std::sin(-g.angles[0] / 2.0);
        double pr1 = std::cos(g.angles[0] / 2.0);
        double pi1 = std::sin(g.angles[0] / 2.0);
        par ? rz_parallel(amps, half, m, pr0, pi0, pr1, pi1)
            : rz_serial(amps, half, m, pr0, pi0, pr1, pi1);
        break;
    }
    case GateKind::CX: {
        u64 mt = qubit_mask(psi.width, g.targets[0]);
        u64 mc = qubit_mask(psi.width, g.controls[0]);
        par ? cx_parallel(amps, half, mt, mc) : cx_serial(amps, half, mt, mc);
        break;
    }
    case GateKind::CSWAP: {
        u64 mc = qubit_mask(psi.width, g.controls[0]);
        u64 ma = qubit_mask(psi.width, g.targets[0]);
        u64 mb = qubit_mask(psi.width, g.targets[1]);
        par ? cswap_parallel(amps, dim, mc, ma, mb) : cswap_serial(amps, dim, mc, ma, mb);
        break;
    }
    case GateKind::MUX_RY: {
        u64 m = qubit_mask(psi.width, g.targets[0]);
        MuxTables t = build_mux_tables(psi, g, true);
        par ? mux_ry_parallel(amps, half, m, t) : mux_ry_serial(amps, half, m, t);
        break;
    }
    case GateKind::MUX_RZ: {
        u64 m = qubit_mask(psi.width, g.targets[0]);
        MuxTables t = build_mux_tables(psi, g, false);
        par ? mux_rz_parallel(amps, half, m, t) : mux_rz_serial(amps, half, m, t);
        break;
    }
    }
}

StateVector simulate(const Circuit& c, SimBackend backend) {
    validate(c);
    if (c.width > max_sim_qubits()) {
        throw TooWide("simulate: circuit width exceeds the qubit cap");
    }
    StateVector psi;
    psi.width = c.width;
    psi.amps.assign(u64{1} << c.width, cplx{0.0, 0.0});
    psi.amps[0] = cplx{1.0, 0.0};
    for (const auto& g : c.gates) {
        apply_gate(psi, g, backend);
    }
    return psi;
}

Distribution output_marginals(const StateVector& psi, const std::vector<QubitRole>& roles) {
    if (roles.size() != static_cast<std::size_t>(psi.width)) {
        throw DimensionMismatch("output_marginals: roles must cover every qubit");
    }
    int n = output_count(roles);
    std::vector<std::pair<int, int>> shifts; // (state shift, output shift)
    for (std::size_t q = 0; q < roles.size(); ++q) {
        if (roles[q].output) {
            shifts.emplace_back(psi.width - 1 - static_cast<int>(q), n - 1 - roles[q].bit);
        }
    }
    Distribution d;
    d.probs.assign(std::size_t{1} << n, 0.0);
    for (u64 i = 0; i < psi.amps.size(); ++i) {
        u64 p = 0;
        for (const auto& [ss, os] : shifts) {
            p |= ((i >> ss) & 1) << os;
        }
        d.probs[p] += std::norm(psi.amps[i]);
    }
    return d;
}

Distribution sample(const StateVector& psi, const std::vector<QubitRole>& roles,
                    std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw Error("sample: shots must be >= 1");
    }
    if (roles.size() != static_cast<std::size_t>(psi.width)) {
        throw DimensionMismatch("sample: roles must cover every qubit");
    }
    int n = output_count(roles);
    std::vector<std::pair<int, int>> shifts;
    for (std::size_t q = 0; q < roles.size(); ++q) {
        if (roles[q].output) {
            shifts.emplace_back(psi.width - 1 - static_cast<int>(q), n - 1 - roles[q].bit);
        }
    }
    std::vector<double> cum(psi.amps.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < psi.amps.size(); ++i) {
        acc += std::norm(psi.amps[i]);
        cum[i] = acc;
    }

    std::mt19937_64 rng(seed);
    std::vector<double> counts(std::size_t{1} << n, 0.0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cum.begin(), cum.end(), u);
        u64 idx = (it == cum.end()) ? psi.amps.size() - 1
                                    : static_cast<u64>(it - cum.begin());
        u64 p = 0;
        for (const auto& [ss, os] : shifts) {
            p |= ((idx >> ss) & 1) << os;
        }
        counts[p] += 1.0;
    }
    Distribution d;
    d.probs.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        d.probs[i] = counts[i] / static_cast<double>(shots);
    }
    return d;
}

StateDistance state_distance(const StateVector& psi, const AmplitudeVector& target) {
    if (psi.amps.size() != target.entries.size()) {
        throw DimensionMismatch("state_distance: dimension mismatch");
    }
    cplx ip{0.0, 0.0};
    for (std::size_t i = 0; i < psi.amps.size(); ++i) {
        ip += std::conj(target.entries[i]) * psi.amps[i];
    }
    return {std::abs(ip), std::arg(ip)};
}

double mae(const Distribution& est, const Distribution& target) {
    if (est.probs.size() != target.probs.size()) {
        throw DimensionMismatch("mae: distribution length mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < est.probs.size(); ++i) {
        s += std::abs(est.probs[i] - target.probs[i]);
    }
    return s / static_cast<double>(est.probs.size());
}

} // namespace qsprep
