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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsprep/errors.hpp"

namespace qsprep {

using cplx = std::complex<double>;

/**
 * @brief Normalized dense amplitude vector of length 2^n.
 */
struct AmplitudeVector {
    int n = 0;
    std::vector<cplx> entries;

    std::size_t size() const { return entries.size(); }
};

struct SparseEntry {
    std::uint64_t index = 0;
    cplx amp{0.0, 0.0};
};

/**
 * @brief Normalized sparse amplitude vector: entries strictly increasing by
 * index, all indices in [0, 2^n).
 */
struct SparseAmplitudeVector {
    int n = 0;
    std::vector<SparseEntry> entries;

    std::size_t m() const { return entries.size(); }
};

struct LoadOptions {
    bool normalize = false;
    double tol = 1e-9;
};

/**
 * @brief Validate and ingest a raw complex vector.
 *
 * Pads with trailing zeros to the next power of two (minimum length 2). With
 * options.normalize the vector is divided by its 2-norm; otherwise inputs
 * whose squared norm deviates from 1 by more than options.tol are rejected.
 *
 * @throws ZeroNorm if all entries are zero.
 * @throws NotNormalized if normalization is off and the norm is out of tolerance.
 */
AmplitudeVector load_vector(std::vector<cplx> raw, const LoadOptions& options = {});

/**
 * @brief Validate and ingest sparse entries (index, amplitude) for an n-qubit
 * vector. Same normalization contract as load_vector.
 */
SparseAmplitudeVector load_sparse(int n, std::vector<SparseEntry> entries,
                                  const LoadOptions& options = {});

/**
 * @brief Keep entries with |amplitude| > eps, renormalizing only when the
 * dropped entries carried nonzero mass (dropping exact zeros is lossless, and
 * skipping the redundant rescale keeps densify(sparsify(v, 0)) == v bit-exact).
 *
 * @throws ZeroNorm if nothing survives the threshold.
 */
SparseAmplitudeVector sparsify(const AmplitudeVector& v, double eps);

/// Expand a sparse vector back to dense form.
AmplitudeVector densify(const SparseAmplitudeVector& v);

} // namespace qsprep
