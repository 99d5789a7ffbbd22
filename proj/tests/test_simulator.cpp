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
#include <cstdlib>
#include <cstring>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <doctest.h>

#include "qsprep/circuit.hpp"
#include "qsprep/errors.hpp"
#include "qsprep/simulator.hpp"
#include "test_helpers.hpp"

using namespace qsprep;
using namespace qsprep::testing;

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm2(const StateVector& psi) {
    double acc = 0.0;
    for (const cplx& a : psi.amps) acc += std::norm(a);
    return acc;
}

StateVector zero_state(int width) {
    StateVector psi;
    psi.width = width;
    psi.amps.assign(std::size_t{1} << width, cplx{0.0, 0.0});
    psi.amps[0] = 1.0;
    return psi;
}

// Mixed-kind random circuit touching every qubit.
Circuit random_circuit(int width, int gates, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    Circuit c;
    c.width = width;
    auto qubit = [&] { return static_cast<int>(rng() % width); };
    for (int i = 0; i < gates; ++i) {
        switch (rng() % 5) {
        case 0: c.ry(angle(rng), qubit()); break;
        case 1: c.rz(angle(rng), qubit()); break;
        case 2: {
            int a = qubit(), b = qubit();
            if (a == b) b = (b + 1) % width;
            c.cx(a, b);
            break;
        }
        case 3: {
            int a = qubit(), b = (a + 1) % width, d = (a + 2) % width;
            if (width >= 3) c.cswap(a, b, d);
            break;
        }
        default: {
            int t = qubit(), ctl = (t + 1) % width;
            c.mux_ry({angle(rng), angle(rng)}, {ctl}, t);
            c.mux_rz({angle(rng), angle(rng)}, {ctl}, t);
            break;
        }
        }
    }
    return c;
}

} // namespace

TEST_CASE("a half-turn rotation makes the uniform single-qubit state") {
    Circuit c;
    c.width = 1;
    c.ry(kPi / 2.0, 0);
    StateVector psi = simulate(c);
    double inv = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(psi.amps[0] - cplx{inv, 0.0}) < 1e-15);
    CHECK(std::abs(psi.amps[1] - cplx{inv, 0.0}) < 1e-15);
}

TEST_CASE("every gate kind matches its textbook matrix") {
    // Rotations on each qubit position of a 2-qubit register.
    for (int q = 0; q < 2; ++q) {
        Circuit cy;
        cy.width = 2;
        cy.ry(0.8, q);
        Matrix ry_ref = q == 0 ? kron(ry_mat(0.8), identity(2))
                               : kron(identity(2), ry_mat(0.8));
        CHECK(direct_max_diff(circuit_unitary(cy), ry_ref) < 1e-13);

        Circuit cz;
        cz.width = 2;
        cz.rz(-1.3, q);
        Matrix rz_ref = q == 0 ? kron(rz_mat(-1.3), identity(2))
                               : kron(identity(2), rz_mat(-1.3));
        CHECK(direct_max_diff(circuit_unitary(cz), rz_ref) < 1e-13);
    }

    Circuit cx01;
    cx01.width = 2;
    cx01.cx(0, 1);
    CHECK(direct_max_diff(circuit_unitary(cx01), perm_mat({0, 1, 3, 2})) == 0.0);

    Circuit cx10;
    cx10.width = 2;
    cx10.cx(1, 0);
    CHECK(direct_max_diff(circuit_unitary(cx10), perm_mat({0, 3, 2, 1})) == 0.0);

    Circuit fredkin;
    fredkin.width = 3;
    fredkin.cswap(0, 1, 2);
    CHECK(direct_max_diff(circuit_unitary(fredkin),
                          perm_mat({0, 1, 2, 3, 4, 6, 5, 7})) == 0.0);

    double t0 = 0.4, t1 = -2.1;
    for (bool use_ry : {true, false}) {
        Circuit mux;
        mux.width = 2;
        if (use_ry) {
            mux.mux_ry({t0, t1}, {0}, 1);
        } else {
            mux.mux_rz({t0, t1}, {0}, 1);
        }
        Matrix ref = identity(4);
        Matrix g0 = use_ry ? ry_mat(t0) : rz_mat(t0);
        Matrix g1 = use_ry ? ry_mat(t1) : rz_mat(t1);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                ref[i][j] = g0[i][j];
                ref[2 + i][2 + j] = g1[i][j];
            }
        }
        CHECK(direct_max_diff(circuit_unitary(mux), ref) < 1e-13);
    }
}

TEST_CASE("multiplexer control patterns read controls most significant first") {
    double a2 = 0.9;
    Circuit c;
    c.width = 3;
    c.ry(kPi, 0); // controls read the pattern 10 = 2
    c.mux_ry({0.1, 0.2, a2, 0.3}, {0, 1}, 2);
    StateVector psi = simulate(c);
    CHECK(std::abs(psi.amps[4] - cplx{std::cos(a2 / 2.0), 0.0}) < 1e-13);
    CHECK(std::abs(psi.amps[5] - cplx{std::sin(a2 / 2.0), 0.0}) < 1e-13);
}

TEST_CASE("gates preserve the norm") {
    Circuit c = random_circuit(4, 60, 17);
    StateVector psi = zero_state(4);
    for (const Gate& g : c.gates) {
        apply_gate(psi, g, SimBackend::serial_reference);
        CHECK(std::abs(norm2(psi) - 1.0) <= 1e-10);
    }
}

TEST_CASE("parallel and serial kernels agree bit for bit") {
#ifdef _OPENMP
    omp_set_num_threads(3); // uneven split across the pair loop
#endif
    Circuit c = random_circuit(14, 120, 23); // above the parallel cutoff
    StateVector par = simulate(c, SimBackend::parallel);
    StateVector ser = simulate(c, SimBackend::serial_reference);
    REQUIRE(par.amps.size() == ser.amps.size());
    CHECK(std::memcmp(par.amps.data(), ser.amps.data(),
                      par.amps.size() * sizeof(cplx)) == 0);
}

TEST_CASE("the empty circuit leaves the all-zeros state") {
    Circuit c;
    c.width = 2;
    StateVector psi = simulate(c);
    CHECK(psi.amps[0] == cplx{1.0, 0.0});
    for (int i = 1; i < 4; ++i) CHECK(psi.amps[i] == cplx{0.0, 0.0});
}

TEST_CASE("marginals honor the output bit mapping") {
    Circuit c;
    c.width = 3;
    c.ry(kPi, 0); // state |100>
    c.roles = {{true, 0}, {true, 1}, {true, 2}};
    StateVector psi = simulate(c);
    Distribution ident = output_marginals(psi, c.roles);
    CHECK(ident.probs[4] == doctest::Approx(1.0));

    std::vector<QubitRole> reversed = {{true, 2}, {true, 1}, {true, 0}};
    Distribution rev = output_marginals(psi, reversed);
    CHECK(rev.probs[1] == doctest::Approx(1.0)); // qubit 0 is now the low bit
}

TEST_CASE("non-output qubits are traced out of the marginals") {
    Circuit c;
    c.width = 2;
    c.ry(kPi / 2.0, 1); // entangles nothing, but spreads the work qubit
    c.roles = {{true, 0}, {false, -1}};
    Distribution m = output_marginals(simulate(c), c.roles);
    REQUIRE(m.probs.size() == 2);
    CHECK(m.probs[0] == doctest::Approx(1.0));
    CHECK(m.probs[1] == doctest::Approx(0.0));
}

TEST_CASE("marginals require one role per qubit") {
    StateVector psi = zero_state(2);
    std::vector<QubitRole> short_roles = {{true, 0}};
    CHECK_THROWS_AS(output_marginals(psi, short_roles), DimensionMismatch);
}

TEST_CASE("sampling is deterministic and matches the distribution") {
    std::vector<QubitRole> roles = {{true, 0}, {true, 1}, {true, 2}};

    Circuit basis;
    basis.width = 3;
    StateVector zero = simulate(basis);
    Distribution d = sample(zero, roles, 100, 42);
    CHECK(d.probs[0] == doctest::Approx(1.0));

    Circuit uniform;
    uniform.width = 3;
    for (int q = 0; q < 3; ++q) uniform.ry(kPi / 2.0, q);
    StateVector psi = simulate(uniform);
    Distribution a = sample(psi, roles, 1 << 20, 7);
    Distribution b = sample(psi, roles, 1 << 20, 7);
    CHECK(a.probs == b.probs);
    for (double p : a.probs) CHECK(std::abs(p - 0.125) < 0.01);

    Distribution other = sample(psi, roles, 1 << 10, 8);
    CHECK(other.probs.size() == 8);
    CHECK_THROWS_AS(sample(psi, roles, 0, 1), Error);
}

TEST_CASE("mean absolute error compares distributions pointwise") {
    Distribution a{{0.5, 0.5}};
    Distribution b{{0.4, 0.6}};
    CHECK(mae(a, a) == 0.0);
    CHECK(mae(a, b) == doctest::Approx(0.1));
    Distribution c{{1.0}};
    CHECK_THROWS_AS(mae(a, c), DimensionMismatch);
}

TEST_CASE("state distance reports overlap and global phase") {
    AmplitudeVector target = experiment8();
    StateVector psi;
    psi.width = 3;
    psi.amps = target.entries;
    StateDistance same = state_distance(psi, target);
    CHECK(same.overlap == doctest::Approx(1.0));
    CHECK(std::abs(same.global_phase) < 1e-12);

    double theta = 0.7;
    StateVector rotated = psi;
    for (cplx& a : rotated.amps) a *= std::polar(1.0, theta);
    StateDistance rot = state_distance(rotated, target);
    CHECK(rot.overlap == doctest::Approx(1.0));
    CHECK(rot.global_phase == doctest::Approx(theta));

    AmplitudeVector small = load_vector({cplx{1.0, 0.0}, cplx{0.0, 0.0}});
    CHECK_THROWS_AS(state_distance(psi, small), DimensionMismatch);
}

TEST_CASE("the width cap rejects circuits before allocating") {
    Circuit wide;
    wide.width = max_sim_qubits() + 1;
    CHECK_THROWS_AS(simulate(wide), TooWide);

    setenv("QSPREP_MAX_SIM_QUBITS", "10", 1);
    CHECK(max_sim_qubits() == 10);
    Circuit eleven;
    eleven.width = 11;
    CHECK_THROWS_AS(simulate(eleven), TooWide);
    Circuit ten;
    ten.width = 10;
    CHECK(simulate(ten).amps.size() == 1024);
    setenv("QSPREP_MAX_SIM_QUBITS", "junk", 1);
    CHECK(max_sim_qubits() == 26); // invalid values fall back to the default
    unsetenv("QSPREP_MAX_SIM_QUBITS");
    CHECK(max_sim_qubits() == 26);
}
