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
#include "qsprep/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "qsprep/errors.hpp"
#include "qsprep/synthesis.hpp"
#include "qsprep/trees.hpp"

namespace qsprep {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_split(int n, int s) {
    if (n < 1 || s < 1 || s > n) {
        throw SplitOutOfRange("split must lie in [1, n]");
    }
}

// Double-precision forms used where 64-bit integers could overflow.
double width_real(int n, double s) {
    return (s + 1.0) * std::exp2(static_cast<double>(n) - s) - 1.0;
}

double depth_real(int n, double s) {
    return std::exp2(s) +
           0.5 * (static_cast<double>(n) * n - n - s * s + s);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

long long lower_median(std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    return v[(v.size() - 1) / 2];
}

} // namespace

long long predicted_width(int n, int s) {
    check_split(n, s);
    __int128 w = (static_cast<__int128>(s) + 1) << (n - s);
    w -= 1;
    if (w > static_cast<__int128>(std::numeric_limits<long long>::max())) {
        throw Error("predicted_width: value does not fit 64 bits");
    }
    return static_cast<long long>(w);
}

double predicted_depth(int n, int s) {
    check_split(n, s);
    return depth_real(n, s);
}

std::vector<SplitPrediction> predict_all(int n) {
    std::vector<SplitPrediction> out;
    for (int s = 1; s <= n; ++s) {
        out.push_back({n, s, predicted_depth(n, s), predicted_width(n, s)});
    }
    return out;
}

int choose_split(int n, SplitMode mode) {
    if (n < 1) {
        throw Error("choose_split: n must be >= 1");
    }
    switch (mode) {
    case SplitMode::top_down:
        return n;
    case SplitMode::bottom_up:
        return 1;
    case SplitMode::sublinear:
        return (n + 1) / 2;
    case SplitMode::automatic:
        return n <= 3 ? n : (n + 1) / 2;
    case SplitMode::exact_balance: {
        int best = 1;
        double best_gap = std::numeric_limits<double>::infinity();
        for (int s = 1; s <= n; ++s) {
            double gap = std::abs(width_real(n, s) - depth_real(n, s));
            if (gap < best_gap) {
                best_gap = gap;
                best = s;
            }
        }
        return best;
    }
    }
    throw Error("choose_split: unknown mode");
}

double balance_root(int n) {
    if (n < 1) {
        throw Error("balance_root: n must be >= 1");
    }
    auto f = [n](double r) { return depth_real(n, r) - width_real(n, r); };
    double lo = 1.0;
    double hi = static_cast<double>(n);
    if (f(lo) >= 0.0) {
        return lo;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-9; ++it) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
    std::uint64_t h = splitmix64(seed ^ a);
    h = splitmix64(h ^ b);
    return splitmix64(h ^ c);
}

AmplitudeVector random_complex_vector(int n, std::uint64_t seed) {
    if (n < 1 || n > 30) {
        throw Error("random_complex_vector: n must lie in [1, 30]");
    }
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        // In (0, 1]: keeps the log() of the Box-Muller transform finite.
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    };
    std::size_t dim = std::size_t{1} << n;
    std::vector<cplx> entries(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        double r = std::sqrt(-2.0 * std::log(uniform()));
        double phi = 2.0 * kPi * uniform();
        entries[i] = cplx(r * std::cos(phi), r * std::sin(phi));
    }
    LoadOptions opt;
    opt.normalize = true;
    return load_vector(entries, opt);
}

std::vector<SweepRow> sweep(int n_min, int n_max, int s_min, int s_max, int trials,
                            std::uint64_t seed) {
    if (n_min < 1 || n_max < n_min || trials < 1) {
        throw Error("sweep: need 1 <= n_min <= n_max and trials >= 1");
    }
    std::vector<SweepRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        int s_lo = std::max(1, s_min);
        int s_hi = std::min(n, s_max);
        for (int s = s_lo; s <= s_hi; ++s) {
            std::vector<long long> abstract, native, cx;
            long long qubits = 0;
            for (int t = 0; t < trials; ++t) {
                std::uint64_t sub = derive_seed(seed, static_cast<std::uint64_t>(n),
                                                static_cast<std::uint64_t>(s),
                                                static_cast<std::uint64_t>(t));
                AmplitudeVector v = random_complex_vector(n, sub);
                auto tree = build_state_tree(v);
                auto angles = build_angle_tree(*tree);
                Circuit c = synth_bidirectional(*angles, s);
                ResourceReport r = metrics(c);
                qubits = r.width;
                abstract.push_back(r.abstract_depth);
                native.push_back(r.native_depth);
                cx.push_back(r.cx_count);
            }
            rows.push_back({n, s, qubits, lower_median(abstract), lower_median(native),
                            lower_median(cx)});
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "n,s,qubits,abstract_depth,native_depth,cx_count\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%lld,%lld,%lld,%lld\n", r.n, r.s, r.qubits,
                      r.abstract_depth, r.native_depth, r.cx_count);
        out += buf;
    }
    return out;
}

} // namespace qsprep
