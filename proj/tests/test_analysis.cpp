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
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <doctest.h>

#include "qsprep/analysis.hpp"
#include "qsprep/errors.hpp"

using namespace qsprep;

TEST_CASE("width predictions match the closed form tables") {
    const std::vector<std::vector<long long>> want = {
        {7, 5, 3},
        {15, 11, 7, 4},
        {31, 23, 15, 9, 5},
        {63, 47, 31, 19, 11, 6},
    };
    for (int n = 3; n <= 6; ++n) {
        for (int s = 1; s <= n; ++s) {
            CHECK(predicted_width(n, s) == want[n - 3][s - 1]);
        }
    }
}

TEST_CASE("depth predictions match the closed form") {
    CHECK(predicted_depth(3, 3) == doctest::Approx(8.0));
    CHECK(predicted_depth(3, 1) == doctest::Approx(5.0));
    CHECK(predicted_depth(4, 2) == doctest::Approx(9.0)); // 4 + (16-4-4+2)/2
}

TEST_CASE("depth rises and width falls as the split grows") {
    for (int n = 2; n <= 10; ++n) {
        for (int s = 1; s < n; ++s) {
            CHECK(predicted_width(n, s) > predicted_width(n, s + 1));
            CHECK(predicted_depth(n, s) < predicted_depth(n, s + 1));
        }
    }
}

TEST_CASE("predictions reject splits outside [1, n]") {
    CHECK_THROWS_AS(predicted_width(3, 0), SplitOutOfRange);
    CHECK_THROWS_AS(predicted_width(3, 4), SplitOutOfRange);
    CHECK_THROWS_AS(predicted_depth(3, 0), SplitOutOfRange);
    CHECK_THROWS_AS(predicted_depth(3, 4), SplitOutOfRange);
}

TEST_CASE("width prediction refuses values beyond 64 bits") {
    // (1+1) * 2^62 - 1 = 2^63 - 1 is the largest representable width.
    CHECK(predicted_width(63, 1) == std::numeric_limits<long long>::max());
    CHECK_THROWS_AS(predicted_width(64, 1), Error);
    CHECK_THROWS_AS(predicted_width(80, 2), Error);
}

TEST_CASE("predict_all covers every split once") {
    std::vector<SplitPrediction> all = predict_all(5);
    REQUIRE(all.size() == 5);
    for (int s = 1; s <= 5; ++s) {
        CHECK(all[s - 1].n == 5);
        CHECK(all[s - 1].s == s);
        CHECK(all[s - 1].predicted_width == predicted_width(5, s));
        CHECK(all[s - 1].predicted_abstract_depth ==
              doctest::Approx(predicted_depth(5, s)));
    }
}

TEST_CASE("split selection modes") {
    CHECK(choose_split(3, SplitMode::automatic) == 3); // up to 8 amplitudes
    CHECK(choose_split(4, SplitMode::automatic) == 2);
    CHECK(choose_split(9, SplitMode::automatic) == 5);
    CHECK(choose_split(4, SplitMode::sublinear) == 2);
    CHECK(choose_split(5, SplitMode::sublinear) == 3);
    CHECK(choose_split(6, SplitMode::top_down) == 6);
    CHECK(choose_split(6, SplitMode::bottom_up) == 1);
    CHECK(choose_split(10, SplitMode::exact_balance) == 6);
    CHECK(choose_split(16, SplitMode::exact_balance) == 10);
    CHECK(choose_split(20, SplitMode::exact_balance) == 12);
    CHECK_THROWS_AS(choose_split(0, SplitMode::automatic), Error);
}

TEST_CASE("the integer balance point minimizes the width-depth gap") {
    for (int n : {10, 16, 20}) {
        int best = choose_split(n, SplitMode::exact_balance);
        double best_gap = std::abs(static_cast<double>(predicted_width(n, best)) -
                                   predicted_depth(n, best));
        for (int s = 1; s <= n; ++s) {
            double gap = std::abs(static_cast<double>(predicted_width(n, s)) -
                                  predicted_depth(n, s));
            CHECK(best_gap <= gap + 1e-9);
        }
    }
}

TEST_CASE("the continuous balance root drifts toward the midpoint ratio") {
    CHECK(std::abs(balance_root(10) - 6.174) < 0.05);
    CHECK(std::abs(balance_root(16) - 9.655) < 0.05);
    CHECK(std::abs(balance_root(20) - 11.814) < 0.05);
    double prev = 1e9;
    for (int n : {10, 16, 20}) {
        double ratio = std::abs(balance_root(n) / n - 0.5);
        CHECK(ratio <= prev + 1e-12);
        prev = ratio;
    }
    CHECK_THROWS_AS(balance_root(0), Error);
}

TEST_CASE("seed derivation separates every grid point") {
    CHECK(derive_seed(42, 3, 1, 0) == derive_seed(42, 3, 1, 0));
    CHECK(derive_seed(42, 3, 1, 0) != derive_seed(42, 3, 1, 1));
    CHECK(derive_seed(42, 3, 1, 0) != derive_seed(42, 3, 2, 0));
    CHECK(derive_seed(42, 3, 1, 0) != derive_seed(43, 3, 1, 0));
}

TEST_CASE("random vectors are deterministic, normalized, and bounded") {
    AmplitudeVector a = random_complex_vector(4, 9);
    AmplitudeVector b = random_complex_vector(4, 9);
    CHECK(a.entries == b.entries);
    double norm = 0.0;
    for (const cplx& x : a.entries) norm += std::norm(x);
    CHECK(norm == doctest::Approx(1.0));
    CHECK(random_complex_vector(4, 10).entries != a.entries);
    CHECK_THROWS_AS(random_complex_vector(0, 1), Error);
    CHECK_THROWS_AS(random_complex_vector(31, 1), Error);
}

TEST_CASE("sweeps are deterministic and clamp the split range") {
    std::vector<SweepRow> rows = sweep(3, 4, 1, 99, 2, 42);
    REQUIRE(rows.size() == 7); // 3 splits at n=3, 4 at n=4
    std::vector<SweepRow> again = sweep(3, 4, 1, 99, 2, 42);
    REQUIRE(again.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == again[i].n);
        CHECK(rows[i].s == again[i].s);
        CHECK(rows[i].qubits == again[i].qubits);
        CHECK(rows[i].abstract_depth == again[i].abstract_depth);
        CHECK(rows[i].native_depth == again[i].native_depth);
        CHECK(rows[i].cx_count == again[i].cx_count);
    }
    for (const SweepRow& r : rows) {
        CHECK(r.qubits == predicted_width(r.n, r.s));
        CHECK(r.native_depth > 0);
        CHECK(r.abstract_depth > 0);
    }
    CHECK(rows[0].n == 3);
    CHECK(rows[0].s == 1);
    CHECK(rows.back().n == 4);
    CHECK(rows.back().s == 4);
    CHECK_THROWS_AS(sweep(3, 2, 1, 3, 1, 0), Error);
    CHECK_THROWS_AS(sweep(3, 3, 1, 3, 0, 0), Error);
}

TEST_CASE("sweep CSV uses the pinned header and one line per row") {
    std::vector<SweepRow> rows = sweep(3, 3, 1, 3, 1, 7);
    std::string csv = sweep_csv(rows);
    CHECK(csv.rfind("n,s,qubits,abstract_depth,native_depth,cx_count\n", 0) == 0);
    long long newlines = 0;
    for (char ch : csv) newlines += ch == '\n';
    CHECK(newlines == static_cast<long long>(rows.size()) + 1);
}
