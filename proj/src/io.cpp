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
#include "qsprep/io.hpp"

#include <json.hpp>

#include "qsprep/errors.hpp"

namespace qsprep {

namespace {

using nlohmann::json;

cplx parse_amp(const json& v, const char* where) {
    if (v.is_number()) {
        return cplx(v.get<double>(), 0.0);
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return cplx(v[0].get<double>(), v[1].get<double>());
    }
    throw Error(std::string(where) + ": amplitude must be a number or an [re, im] pair");
}

json amp_to_json(const cplx& a) {
    return json::array({a.real(), a.imag()});
}

json parse_text(const std::string& text, const char* where) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw Error(std::string(where) + ": malformed JSON");
    }
    return j;
}

const char* kind_name(GateKind k) {
    switch (k) {
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::CSWAP: return "cswap";
    case GateKind::MUX_RY: return "mux_ry";
    case GateKind::MUX_RZ: return "mux_rz";
    }
    return "?";
}

GateKind kind_from_name(const std::string& s) {
    if (s == "ry") return GateKind::RY;
    if (s == "rz") return GateKind::RZ;
    if (s == "cx") return GateKind::CX;
    if (s == "cswap") return GateKind::CSWAP;
    if (s == "mux_ry") return GateKind::MUX_RY;
    if (s == "mux_rz") return GateKind::MUX_RZ;
    throw Error("circuit_from_json: unknown gate kind '" + s + "'");
}

json state_node_to_json(const StateTreeNode& node) {
    json j;
    j["level"] = node.level;
    j["index"] = node.index;
    j["amplitude"] = amp_to_json(node.amplitude());
    j["children"] = json::array(
        {node.left ? state_node_to_json(*node.left) : json(nullptr),
         node.right ? state_node_to_json(*node.right) : json(nullptr)});
    return j;
}

json angle_node_to_json(const AngleTreeNode& node) {
    json j;
    j["level"] = node.level;
    j["index"] = node.index;
    j["angles"] = json::array({node.angle_y, node.angle_z});
    j["children"] = json::array(
        {node.left ? angle_node_to_json(*node.left) : json(nullptr),
         node.right ? angle_node_to_json(*node.right) : json(nullptr)});
    return j;
}

} // namespace

ParsedInput parse_input_json(const std::string& text) {
    json j = parse_text(text, "parse_input_json");
    ParsedInput out;
    if (j.is_object() && j.contains("amplitudes")) {
        const json& arr = j["amplitudes"];
        if (!arr.is_array() || arr.empty()) {
            throw Error("parse_input_json: \"amplitudes\" must be a nonempty array");
        }
        out.sparse = false;
        out.dense.reserve(arr.size());
        for (const json& v : arr) {
            out.dense.push_back(parse_amp(v, "parse_input_json"));
        }
        return out;
    }
    if (j.is_object() && j.contains("n") && j.contains("entries")) {
        if (!j["n"].is_number_integer()) {
            throw Error("parse_input_json: \"n\" must be an integer");
        }
        const json& arr = j["entries"];
        if (!arr.is_array() || arr.empty()) {
            throw Error("parse_input_json: \"entries\" must be a nonempty array");
        }
        out.sparse = true;
        out.n = j["n"].get<int>();
        out.entries.reserve(arr.size());
        for (const json& e : arr) {
            if (!e.is_object() || !e.contains("index") || !e.contains("amp") ||
                !e["index"].is_number_integer()) {
                throw Error("parse_input_json: sparse entry must be "
                            "{\"index\": int, \"amp\": value}");
            }
            SparseEntry se;
            se.index = e["index"].get<std::uint64_t>();
            se.amp = parse_amp(e["amp"], "parse_input_json");
            out.entries.push_back(se);
        }
        return out;
    }
    throw Error("parse_input_json: expected {\"amplitudes\": [...]} or "
                "{\"n\": int, \"entries\": [...]}");
}

std::string circuit_to_json(const Circuit& c, int indent) {
    json j;
    j["width"] = c.width;
    j["roles"] = json::array();
    for (const auto& r : c.roles) {
        j["roles"].push_back({{"output", r.output}, {"bit", r.bit}});
    }
    j["gates"] = json::array();
    for (const auto& g : c.gates) {
        json jg;
        jg["kind"] = kind_name(g.kind);
        jg["controls"] = g.controls;
        jg["targets"] = g.targets;
        jg["angles"] = g.angles;
        j["gates"].push_back(std::move(jg));
    }
    return j.dump(indent);
}

Circuit circuit_from_json(const std::string& text) {
    json j = parse_text(text, "circuit_from_json");
    if (!j.is_object() || !j.contains("width") || !j.contains("roles") ||
        !j.contains("gates")) {
        throw Error("circuit_from_json: expected {\"width\", \"roles\", \"gates\"}");
    }
    Circuit c;
    c.width = j["width"].get<int>();
    for (const json& r : j["roles"]) {
        QubitRole role;
        role.output = r.at("output").get<bool>();
        role.bit = r.at("bit").get<int>();
        c.roles.push_back(role);
    }
    for (const json& jg : j["gates"]) {
        Gate g;
        g.kind = kind_from_name(jg.at("kind").get<std::string>());
        g.controls = jg.at("controls").get<std::vector<int>>();
        g.targets = jg.at("targets").get<std::vector<int>>();
        g.angles = jg.at("angles").get<std::vector<double>>();
        c.gates.push_back(std::move(g));
    }
    validate(c);
    return c;
}

std::string state_tree_to_json(const StateTreeNode& root, int indent) {
    return state_node_to_json(root).dump(indent);
}

std::string angle_tree_to_json(const AngleTreeNode& root, int indent) {
    return angle_node_to_json(root).dump(indent);
}

std::string distribution_to_json(const Distribution& d) {
    return json(d.probs).dump();
}

std::string report_to_json(const ResourceReport& r, int indent) {
    json j;
    j["width"] = r.width;
    j["native_depth"] = r.native_depth;
    j["cx_count"] = r.cx_count;
    j["abstract_stage1_steps"] = r.abstract_stage1_steps;
    j["abstract_stage2_cswap_depth"] = r.abstract_stage2_cswap_depth;
    j["abstract_depth"] = r.abstract_depth;
    return j.dump(indent);
}

} // namespace qsprep
