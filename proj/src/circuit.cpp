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
#include "qsprep/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cstdarg>
#include <cstdio>
#include <numbers>

namespace qsprep {

namespace {

constexpr double kPi = std::numbers::pi;

bool all_zero(const std::vector<double>& angles) {
    return std::all_of(angles.begin(), angles.end(), [](double a) { return a == 0.0; });
}

void check_mux(const std::vector<double>& angles, const std::vector<int>& controls) {
    if (controls.size() >= 31) {
        throw Error("multiplexer: too many controls");
    }
    if (angles.size() != (std::size_t{1} << controls.size())) {
        throw Error("multiplexer: angle list length must be 2^controls");
    }
}

// Gray-code angle transform: hat_i = 2^-c * sum_j (-1)^{popcount(j & gray(i))} theta_j.
std::vector<double> mux_hat_angles(const std::vector<double>& angles) {
    const std::size_t size = angles.size();
    std::vector<double> hat(size, 0.0);
    for (std::size_t i = 0; i < size; ++i) {
        std::uint64_t gray = i ^ (i >> 1);
        double acc = 0.0;
        for (std::size_t j = 0; j < size; ++j) {
            acc += (std::popcount(j & gray) & 1) ? -angles[j] : angles[j];
        }
        hat[i] = acc / static_cast<double>(size);
    }
    return hat;
}

void lower_mux(Circuit& out, const Gate& g) {
    if (all_zero(g.angles)) {
        return;
    }
    const bool is_y = g.kind == GateKind::MUX_RY;
    const int target = g.targets[0];
    const int c = static_cast<int>(g.controls.size());
    if (c == 0) {
        if (is_y) {
            out.ry(g.angles[0], target);
        } else {
            out.rz(g.angles[0], target);
        }
        return;
    }
    const std::size_t size = g.angles.size();
    std::vector<double> hat = mux_hat_angles(g.angles);
    for (std::size_t i = 0; i < size; ++i) {
        if (is_y) {
            out.gates.push_back({GateKind::RY, {}, {target}, {hat[i]}});
        } else {
            out.gates.push_back({GateKind::RZ, {}, {target}, {hat[i]}});
        }
        // CX control from the Gray-code bit flipped between step i and i+1;
        // the closing CX uses the most significant control.
        int p = (i + 1 == size) ? c - 1 : std::countr_zero(i + 1);
        out.cx(g.controls[static_cast<std::size_t>(c - 1 - p)], target);
    }
}

void lower_toffoli(Circuit& out, int c1, int c2, int t) {
    auto h = [&](int q) {
        out.rz(kPi, q);
        out.ry(kPi / 2.0, q);
    };
    auto tg = [&](int q) { out.rz(kPi / 4.0, q); };
    auto tdg = [&](int q) { out.rz(-kPi / 4.0, q); };

    h(t);
    out.cx(c2, t);
    tdg(t);
    out.cx(c1, t);
    tg(t);
    out.cx(c2, t);
    tdg(t);
    out.cx(c1, t);
    tg(t);
    tg(c2);
    h(t);
    out.cx(c1, c2);
    tg(c1);
    tdg(c2);
    out.cx(c1, c2);
}

void lower_cswap(Circuit& out, const Gate& g) {
    const int ctl = g.controls[0];
    const int a = g.targets[0];
    const int b = g.targets[1];
    out.cx(b, a);
    lower_toffoli(out, ctl, a, b);
    out.cx(b, a);
}

bool is_rotation_like(GateKind k) {
    return k == GateKind::RY || k == GateKind::RZ || k == GateKind::MUX_RY ||
           k == GateKind::MUX_RZ;
}

long long asap_depth(const Circuit& c, bool (*select)(GateKind),
                     long long (*cost)(const Gate&)) {
    std::vector<long long> busy(static_cast<std::size_t>(c.width), 0);
    long long depth = 0;
    for (const auto& g : c.gates) {
        if (!select(g.kind)) {
            continue;
        }
        long long start = 0;
        for (int q : gate_qubits(g)) {
            start = std::max(start, busy[static_cast<std::size_t>(q)]);
        }
        long long end = start + cost(g);
        for (int q : gate_qubits(g)) {
            busy[static_cast<std::size_t>(q)] = end;
        }
        depth = std::max(depth, end);
    }
    return depth;
}

void append_fmt(std::string& out, const char* fmt, ...)
    __attribute__((format(printf, 2, 3)));

void append_fmt(std::string& out, const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    out += buf;
}

} // namespace

void Circuit::ry(double theta, int target) {
    gates.push_back({GateKind::RY, {}, {target}, {theta}});
}

void Circuit::rz(double phi, int target) {
    gates.push_back({GateKind::RZ, {}, {target}, {phi}});
}

void Circuit::cx(int control, int target) {
    gates.push_back({GateKind::CX, {control}, {target}, {}});
}

void Circuit::cswap(int control, int a, int b) {
    gates.push_back({GateKind::CSWAP, {control}, {a, b}, {}});
}

void Circuit::mux_ry(std::vector<double> angles, std::vector<int> controls, int target) {
    check_mux(angles, controls);
    gates.push_back({GateKind::MUX_RY, std::move(controls), {target}, std::move(angles)});
}

void Circuit::mux_rz(std::vector<double> angles, std::vector<int> controls, int target) {
    check_mux(angles, controls);
    gates.push_back({GateKind::MUX_RZ, std::move(controls), {target}, std::move(angles)});
}

std::vector<int> gate_qubits(const Gate& g) {
    std::vector<int> qs = g.controls;
    qs.insert(qs.end(), g.targets.begin(), g.targets.end());
    return qs;
}

int output_count(const std::vector<QubitRole>& roles) {
    int n = 0;
    for (const auto& r : roles) {
        if (r.output) {
            ++n;
        }
    }
    return n;
}

void validate(const Circuit& c) {
    if (c.width <= 0) {
        throw Error("circuit: width must be positive");
    }
    if (!c.roles.empty()) {
        if (c.roles.size() != static_cast<std::size_t>(c.width)) {
            throw Error("circuit: roles must cover every qubit");
        }
        int n = output_count(c.roles);
        std::vector<int> seen(static_cast<std::size_t>(n), 0);
        for (const auto& r : c.roles) {
            if (!r.output) {
                continue;
            }
            if (r.bit < 0 || r.bit >= n) {
                throw Error("circuit: output bit position out of range");
            }
            if (seen[static_cast<std::size_t>(r.bit)]++) {
                throw Error("circuit: duplicate output bit position");
            }
        }
    }
    for (const auto& g : c.gates) {
        std::vector<int> qs = gate_qubits(g);
        for (int q : qs) {
            if (q < 0 || q >= c.width) {
                throw Error("circuit: qubit id out of range");
            }
        }
        std::vector<int> sorted = qs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error("circuit: duplicate qubit within a gate");
        }
        switch (g.kind) {
        case GateKind::RY:
        case GateKind::RZ:
            if (g.controls.size() != 0 || g.targets.size() != 1 || g.angles.size() != 1) {
                throw Error("circuit: malformed rotation");
            }
            break;
        case GateKind::CX:
            if (g.controls.size() != 1 || g.targets.size() != 1 || !g.angles.empty()) {
                throw Error("circuit: malformed CX");
            }
            break;
        case GateKind::CSWAP:
            if (g.controls.size() != 1 || g.targets.size() != 2 || !g.angles.empty()) {
                throw Error("circuit: malformed CSWAP");
            }
            break;
        case GateKind::MUX_RY:
        case GateKind::MUX_RZ:
            if (g.targets.size() != 1) {
                throw Error("circuit: malformed multiplexer");
            }
            check_mux(g.angles, g.controls);
            break;
        }
    }
}

Circuit lower(const Circuit& c) {
    Circuit out;
    out.width = c.width;
    out.roles = c.roles;
    for (const auto& g : c.gates) {
        switch (g.kind) {
        case GateKind::RY:
        case GateKind::RZ:
            if (g.angles[0] != 0.0) {
                out.gates.push_back(g);
            }
            break;
        case GateKind::CX:
            out.gates.push_back(g);
            break;
        case GateKind::CSWAP:
            lower_cswap(out, g);
            break;
        case GateKind::MUX_RY:
        case GateKind::MUX_RZ:
            lower_mux(out, g);
            break;
        }
    }
    return out;
}

ResourceReport metrics(const Circuit& c) {
    Circuit low = lower(c);

    ResourceReport rep;
    rep.width = c.width;
    rep.native_depth = asap_depth(
        low, [](GateKind) { return true; }, [](const Gate&) -> long long { return 1; });
    rep.cx_count = static_cast<long long>(
        std::count_if(low.gates.begin(), low.gates.end(),
                      [](const Gate& g) { return g.kind == GateKind::CX; }));
    rep.abstract_stage1_steps = asap_depth(
        c, is_rotation_like, [](const Gate&) -> long long { return 1; });
    rep.abstract_stage2_cswap_depth = asap_depth(
        c, [](GateKind k) { return k == GateKind::CSWAP; },
        [](const Gate&) -> long long { return 1; });
    long long rotation_steps = asap_depth(c, is_rotation_like, [](const Gate& g) -> long long {
        if (g.kind == GateKind::MUX_RY || g.kind == GateKind::MUX_RZ) {
            return static_cast<long long>(std::size_t{1} << g.controls.size());
        }
        return 1;
    });
    rep.abstract_depth = rotation_steps + rep.abstract_stage2_cswap_depth;
    return rep;
}

std::string export_qasm(const Circuit& c, bool keep_high_level) {
    bool has_cswap = false;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::CSWAP) {
            has_cswap = true;
        }
        if (!keep_high_level &&
            (g.kind == GateKind::CSWAP || g.kind == GateKind::MUX_RY ||
             g.kind == GateKind::MUX_RZ)) {
            throw UnloweredGate("export_qasm: high-level gate requires keep_high_level");
        }
    }

    std::string out;
    out += "OPENQASM 2.0;\n";
    out += "include \"qelib1.inc\";\n";
    if (keep_high_level && has_cswap) {
        out += "gate cswapg a,b,c { cx c,b; ccx a,b,c; cx c,b; }\n";
    }
    append_fmt(out, "qreg q[%d];\n", c.width);

    out += "// outputs:";
    int n = output_count(c.roles);
    std::vector<int> bit_to_qubit(static_cast<std::size_t>(n), -1);
    for (std::size_t q = 0; q < c.roles.size(); ++q) {
        if (c.roles[q].output) {
            bit_to_qubit[static_cast<std::size_t>(c.roles[q].bit)] = static_cast<int>(q);
        }
    }
    for (int b = 0; b < n; ++b) {
        append_fmt(out, " %d->q[%d]", b, bit_to_qubit[static_cast<std::size_t>(b)]);
    }
    out += "\n";

    auto emit_native = [&out](const Gate& g) {
        switch (g.kind) {
        case GateKind::RY:
            append_fmt(out, "ry(%.17g) q[%d];\n", g.angles[0], g.targets[0]);
            break;
        case GateKind::RZ:
            append_fmt(out, "rz(%.17g) q[%d];\n", g.angles[0], g.targets[0]);
            break;
        case GateKind::CX:
            append_fmt(out, "cx q[%d],q[%d];\n", g.controls[0], g.targets[0]);
            break;
        default:
            break;
        }
    };

    for (const auto& g : c.gates) {
        switch (g.kind) {
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::CX:
            emit_native(g);
            break;
        case GateKind::CSWAP:
            append_fmt(out, "cswapg q[%d],q[%d],q[%d];\n", g.controls[0], g.targets[0],
                       g.targets[1]);
            break;
        case GateKind::MUX_RY:
        case GateKind::MUX_RZ: {
            Circuit expanded;
            expanded.width = c.width;
            lower_mux(expanded, g);
            for (const auto& e : expanded.gates) {
                emit_native(e);
            }
            break;
        }
        }
    }
    return out;
}

} // namespace qsprep
