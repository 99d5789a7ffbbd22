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

#include "qsprep/amplitudes.hpp"

namespace qsprep {

/// Closed-form resource prediction for one (n, s) configuration.
struct SplitPrediction {
    int n = 0;
    int s = 0;
    double predicted_abstract_depth = 0.0;
    long long predicted_width = 0;
};

/**
 * @brief Predicted qubit count (s+1)*2^(n-s) - 1 of the split-parameter
 * walk. Throws SplitOutOfRange unless 1 <= s <= n, Error when the value
 * does not fit a 64-bit integer.
 */
long long predicted_width(int n, int s);

/**
 * @brief Predicted abstract depth 2^s + (n^2 - n - s^2 + s)/2: sequential
 * rotation steps of a stage-1 register plus the total stage-2 chain length.
 * Strictly increasing in s for fixed n. Throws SplitOutOfRange unless
 * 1 <= s <= n.
 */
double predicted_depth(int n, int s);

/// Predictions for every s in [1, n], ascending.
std::vector<SplitPrediction> predict_all(int n);

/// Split-selection policies.
enum class SplitMode {
    automatic,    // n for dimensions <= 8, else ceil(n/2)
    sublinear,    // ceil(n/2): square-root depth and width
    top_down,     // n
    bottom_up,    // 1
    exact_balance // integer s minimizing |predicted_width - predicted_depth|
};

/// Pick the split level for the given policy; ties in exact_balance resolve
/// to the smaller s. Throws Error unless n >= 1.
int choose_split(int n, SplitMode mode);

/**
 * @brief Continuous balance point: the real r in [1, n] where the predicted
 * depth and width curves cross (bisection to 1e-9). The integer
 * exact_balance split is this root rounded to the better neighbor; the root
 * itself is what converges toward n/2 as n grows. Returns 1 when the curves
 * already cross at or below r = 1.
 */
double balance_root(int n);

/// One measured grid point of a resource sweep (medians over trials).
struct SweepRow {
    int n = 0;
    int s = 0;
    long long qubits = 0;
    long long abstract_depth = 0;
    long long native_depth = 0;
    long long cx_count = 0;
};

/**
 * @brief Measure lowered split-parameter circuits over seeded random complex
 * vectors for every n in [n_min, n_max] and s in [s_min, s_max] clamped to
 * [1, n]. Each (n, s, trial) derives its own sub-seed, so the result is
 * deterministic given `seed` and independent of evaluation order. Metrics
 * are lower medians across trials. No simulation is involved, so width is
 * not capped; memory grows as 2^n_max.
 */
std::vector<SweepRow> sweep(int n_min, int n_max, int s_min, int s_max, int trials,
                            std::uint64_t seed);

/// CSV rendering with header n,s,qubits,abstract_depth,native_depth,cx_count.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// splitmix64-based sub-seed derivation used by the sweep.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c);

/**
 * @brief Normalized 2^n-dimensional vector whose real and imaginary parts
 * are standard normal, generated from mt19937_64 draws through the
 * Box-Muller transform (u = (x >> 11) * 2^-53, shifted away from zero), so
 * the sequence is identical across platforms.
 */
AmplitudeVector random_complex_vector(int n, std::uint64_t seed);

} // namespace qsprep
