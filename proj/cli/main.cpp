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
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsprep/amplitudes.hpp"
#include "qsprep/analysis.hpp"
#include "qsprep/circuit.hpp"
#include "qsprep/errors.hpp"
#include "qsprep/io.hpp"
#include "qsprep/simulator.hpp"
#include "qsprep/synthesis.hpp"
#include "qsprep/trees.hpp"

namespace {

using namespace qsprep;

// Failures of the I/O and parse phase; mapped to exit code 2 (validation
// failures use the library's Error hierarchy and exit code 1).
struct IoFailure {
    std::string msg;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure{"cannot open input file: " + path};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw IoFailure{"cannot write output file: " + path};
    }
}

struct LoadedInput {
    bool sparse = false;
    AmplitudeVector dense; // densified when the input was sparse
    SparseAmplitudeVector sv;
    int n = 0;
};

LoadedInput load_input(const std::string& path, bool normalize) {
    ParsedInput pi;
    try {
        pi = parse_input_json(read_file(path));
    } catch (const IoFailure&) {
        throw;
    } catch (const std::exception& e) {
        throw IoFailure{e.what()};
    }
    LoadOptions opt;
    opt.normalize = normalize;
    LoadedInput li;
    li.sparse = pi.sparse;
    if (pi.sparse) {
        li.sv = load_sparse(pi.n, pi.entries, opt);
        li.dense = densify(li.sv);
    } else {
        li.dense = load_vector(pi.dense, opt);
    }
    li.n = li.dense.n;
    return li;
}

int resolve_split(const std::string& split, int n) {
    char* end = nullptr;
    long v = std::strtol(split.c_str(), &end, 10);
    if (!split.empty() && end != split.c_str() && *end == '\0') {
        return static_cast<int>(v);
    }
    if (split == "auto") {
        return choose_split(n, SplitMode::automatic);
    }
    if (split == "sublinear") {
        return choose_split(n, SplitMode::sublinear);
    }
    if (split == "top-down") {
        return choose_split(n, SplitMode::top_down);
    }
    if (split == "bottom-up") {
        return choose_split(n, SplitMode::bottom_up);
    }
    if (split == "exact-balance") {
        return choose_split(n, SplitMode::exact_balance);
    }
    throw Error("unknown --split value '" + split +
                "' (want an integer or auto|sublinear|top-down|bottom-up|exact-balance)");
}

Circuit build_circuit(const LoadedInput& li, const std::string& method, int split,
                      int& split_used) {
    if (method == "top-down") {
        auto tree = build_state_tree(li.dense);
        auto angles = build_angle_tree(*tree);
        split_used = li.n;
        return synth_top_down(*angles);
    }
    if (method == "bottom-up") {
        auto tree = build_state_tree(li.dense);
        auto angles = build_angle_tree(*tree);
        split_used = 1;
        return synth_bottom_up(*angles);
    }
    if (method == "bidirectional") {
        auto tree = build_state_tree(li.dense);
        auto angles = build_angle_tree(*tree);
        split_used = split;
        return synth_bidirectional(*angles, split);
    }
    // sparse-bidirectional; dense inputs are sparsified losslessly first.
    SparseAmplitudeVector sv = li.sparse ? li.sv : sparsify(li.dense, 0.0);
    auto tree = build_sparse_state_tree(sv);
    auto angles = build_angle_tree(*tree);
    split_used = split;
    return synth_sparse_bidirectional(*angles, split);
}

struct CommonOpts {
    std::string input;
    std::string method; // empty = pick by input shape
    std::string split = "auto";
    std::string out;
    bool normalize = true;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input, "Input amplitude vector (JSON)")->required();
    cmd->add_option("--method", o.method,
                    "Synthesis walk (default: bidirectional; sparse-bidirectional "
                    "when the input is sparse)")
        ->check(CLI::IsMember(
            {"bidirectional", "sparse-bidirectional", "top-down", "bottom-up"}));
    cmd->add_option("--split", o.split,
                    "Split level: integer in [1, n] or one of "
                    "auto|sublinear|top-down|bottom-up|exact-balance");
    cmd->add_flag("--normalize,!--no-normalize", o.normalize,
                  "Rescale the input to unit norm (default on); with "
                  "--no-normalize a non-normalized input is rejected");
    cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
}

int cmd_synth(const CommonOpts& o, const std::string& emit, bool keep_high_level) {
    LoadedInput li = load_input(o.input, o.normalize);
    std::string method = !o.method.empty()
                             ? o.method
                             : (li.sparse ? std::string("sparse-bidirectional")
                                          : std::string("bidirectional"));
    int split_used = 0;
    Circuit c = build_circuit(li, method, resolve_split(o.split, li.n), split_used);
    ResourceReport report = metrics(c);
    Circuit emitted = keep_high_level ? c : lower(c);

    std::string text;
    if (emit == "qasm") {
        text = export_qasm(emitted, keep_high_level);
        text += "// report: " + report_to_json(report, -1) + "\n";
    } else {
        nlohmann::json j = nlohmann::json::parse(circuit_to_json(emitted));
        j["report"] = nlohmann::json::parse(report_to_json(report));
        text = j.dump(2) + "\n";
    }
    write_output(o.out, text);
    return 0;
}

int cmd_simulate(const CommonOpts& o, std::uint64_t shots, std::uint64_t seed) {
    LoadedInput li = load_input(o.input, o.normalize);
    std::string method = !o.method.empty()
                             ? o.method
                             : (li.sparse ? std::string("sparse-bidirectional")
                                          : std::string("bidirectional"));
    int split_used = 0;
    Circuit c = build_circuit(li, method, resolve_split(o.split, li.n), split_used);
    StateVector psi = simulate(c);

    Distribution target;
    target.probs.resize(li.dense.entries.size());
    for (std::size_t i = 0; i < target.probs.size(); ++i) {
        target.probs[i] = std::norm(li.dense.entries[i]);
    }
    Distribution est = shots == 0 ? output_marginals(psi, c.roles)
                                  : sample(psi, c.roles, shots, seed);

    nlohmann::json j;
    j["n"] = li.n;
    j["method"] = method;
    j["split"] = split_used;
    j["width"] = c.width;
    j["shots"] = shots;
    j["seed"] = seed;
    j["marginals"] = est.probs;
    j["mae"] = mae(est, target);
    bool identity_roles = output_count(c.roles) == c.width;
    for (int q = 0; identity_roles && q < c.width; ++q) {
        identity_roles = c.roles[q].output && c.roles[q].bit == q;
    }
    if (identity_roles) {
        StateDistance dist = state_distance(psi, li.dense);
        j["overlap"] = dist.overlap;
        j["global_phase"] = dist.global_phase;
    }
    write_output(o.out, j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsprep: compile amplitude vectors into state-preparation circuits"};
    app.require_subcommand(1);

    CommonOpts synth_opts;
    std::string emit = "qasm";
    bool keep_high_level = false;
    CLI::App* synth = app.add_subcommand("synth", "Synthesize a circuit and report costs");
    add_common(synth, synth_opts);
    synth->add_option("--emit", emit, "Output format")
        ->check(CLI::IsMember({"qasm", "json"}));
    synth->add_flag("--keep-high-level", keep_high_level,
                    "Emit multiplexers and controlled swaps as-is instead of "
                    "lowering to ry/rz/cx");

    CommonOpts sim_opts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    CLI::App* sim = app.add_subcommand(
        "simulate", "Synthesize, run the statevector simulator, compare to the input");
    add_common(sim, sim_opts);
    sim->add_option("--shots", shots, "0 = exact marginals; otherwise sample counts");
    sim->add_option("--seed", seed, "Sampler seed (default 0)");

    int n_min = 3, n_max = 6, s_min = 1, s_max = 1 << 20, trials = 5;
    std::uint64_t sweep_seed = 0;
    std::string sweep_out;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Measure lowered circuits over random vectors; write CSV");
    sweep_cmd->add_option("--n-min", n_min, "Smallest n (default 3)");
    sweep_cmd->add_option("--n-max", n_max, "Largest n (default 6)");
    sweep_cmd->add_option("--s-min", s_min, "Smallest split (default 1)");
    sweep_cmd->add_option("--s-max", s_max, "Largest split (default: n)");
    sweep_cmd->add_option("--trials", trials, "Random vectors per grid point (default 5)");
    sweep_cmd->add_option("--seed", sweep_seed, "Sweep seed (default 0)");
    sweep_cmd->add_option("--out", sweep_out, "Write CSV here instead of stdout");

    int analyze_n = 0;
    std::string analyze_out;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Print closed-form width/depth predictions for every split");
    analyze->add_option("--n", analyze_n, "Encoded qubit count")->required();
    analyze->add_option("--out", analyze_out, "Write table here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (synth->parsed()) {
            return cmd_synth(synth_opts, emit, keep_high_level);
        }
        if (sim->parsed()) {
            return cmd_simulate(sim_opts, shots, seed);
        }
        if (sweep_cmd->parsed()) {
            std::string csv = sweep_csv(sweep(n_min, n_max, s_min, s_max, trials, sweep_seed));
            write_output(sweep_out, csv);
            return 0;
        }
        if (analyze->parsed()) {
            std::string text = "n s width abstract_depth\n";
            char buf[128];
            for (const SplitPrediction& p : predict_all(analyze_n)) {
                std::snprintf(buf, sizeof(buf), "%d %d %lld %.1f\n", p.n, p.s,
                              p.predicted_width, p.predicted_abstract_depth);
                text += buf;
            }
            write_output(analyze_out, text);
            return 0;
        }
    } catch (const IoFailure& e) {
        std::fprintf(stderr, "error: %s\n", e.msg.c_str());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
