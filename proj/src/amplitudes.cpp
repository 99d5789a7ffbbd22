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
#include "qsprep/amplitudes.hpp"

#include <bit>
#include <cmath>
#include <utility>

namespace qsprep {

namespace {

double sum_sq(const std::vector<cplx>& entries) {
    double s = 0.0;
    for (const auto& a : entries) {
        s += std::norm(a);
    }
    return s;
}

} // namespace

AmplitudeVector load_vector(std::vector<cplx> raw, const LoadOptions& options) {
    if (raw.empty()) {
        throw Error("load_vector: input vector is empty");
    }
    std::size_t padded = std::bit_ceil(raw.size());
    if (padded < 2) {
        padded = 2;
    }
    raw.resize(padded, cplx{0.0, 0.0});

    double s = sum_sq(raw);
    if (s == 0.0) {
        throw ZeroNorm("load_vector: all entries are zero");
    }
    if (options.normalize) {
        double inv = 1.0 / std::sqrt(s);
        for (auto& a : raw) {
            a *= inv;
        }
    } else if (std::abs(s - 1.0) > options.tol) {
        throw NotNormalized("load_vector: squared norm deviates from 1 by more than tolerance");
    }

    AmplitudeVector v;
    v.n = std::countr_zero(padded);
    v.entries = std::move(raw);
    return v;
}

SparseAmplitudeVector load_sparse(int n, std::vector<SparseEntry> entries,
                                  const LoadOptions& options) {
    if (n < 1 || n > 63) {
        throw Error("load_sparse: qubit count out of range");
    }
    if (entries.empty()) {
        throw Error("load_sparse: entry list is empty");
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t prev = 0;
    bool first = true;
    double s = 0.0;
    for (const auto& e : entries) {
        if (e.index >= limit) {
            throw Error("load_sparse: index out of range");
        }
        if (!first && e.index <= prev) {
            throw Error("load_sparse: indices must be strictly increasing");
        }
        prev = e.index;
        first = false;
        s += std::norm(e.amp);
    }
    if (s == 0.0) {
        throw ZeroNorm("load_sparse: all entries are zero");
    }
    if (options.normalize) {
        double inv = 1.0 / std::sqrt(s);
        for (auto& e : entries) {
            e.amp *= inv;
        }
    } else if (std::abs(s - 1.0) > options.tol) {
        throw NotNormalized("load_sparse: squared norm deviates from 1 by more than tolerance");
    }

    SparseAmplitudeVector v;
    v.n = n;
    v.entries = std::move(entries);
    return v;
}

SparseAmplitudeVector sparsify(const AmplitudeVector& v, double eps) {
    SparseAmplitudeVector out;
    out.n = v.n;
    double dropped = 0.0;
    double kept = 0.0;
    for (std::size_t i = 0; i < v.entries.size(); ++i) {
        if (std::abs(v.entries[i]) > eps) {
            out.entries.push_back({static_cast<std::uint64_t>(i), v.entries[i]});
            kept += std::norm(v.entries[i]);
        } else {
            dropped += std::norm(v.entries[i]);
        }
    }
    if (out.entries.empty()) {
        throw ZeroNorm("sparsify: no entries above threshold");
    }
    if (dropped > 0.0) {
        double inv = 1.0 / std::sqrt(kept);
        for (auto& e : out.entries) {
            e.amp *= inv;
        }
    }
    return out;
}

AmplitudeVector densify(const SparseAmplitudeVector& v) {
    AmplitudeVector out;
    out.n = v.n;
    out.entries.assign(std::size_t{1} << v.n, cplx{0.0, 0.0});
    for (const auto& e : v.entries) {
        out.entries[e.index] = e.amp;
    }
    return out;
}

} // namespace qsprep
