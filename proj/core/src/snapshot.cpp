// Copyright 2026 The repnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "repnet/snapshot.hpp"

#include <json.hpp>

#include <cstdio>

#include "repnet/error.hpp"

namespace repnet {

SnapshotFormat parse_snapshot_format(std::string_view name) {
    if (name == "dot") return SnapshotFormat::Dot;
    if (name == "json") return SnapshotFormat::Json;
    throw ValidationError("unknown snapshot format '" + std::string(name) + "' (expected dot or json)");
}

namespace {

std::string export_dot(const DirectedNetwork& net, const CoreAnalysis& analysis, const EquilibriumResult& eq) {
    std::string out = "digraph repnet {\n";
    for (NodeId v = 0; v < net.size(); ++v) {
        char label[64];
        const double b = v < eq.b.size() ? eq.b[v] : 0.0;
        std::snprintf(label, sizeof(label), "%u\\n%.2f", v, b);
        out += "  " + std::to_string(v) + " [label=\"" + label + "\"";
        if (analysis.in_core(v)) out += ", core=true, style=filled, fillcolor=\"#d62728\"";
        out += "];\n";
    }
    for (const Edge& e : net.edges()) {
        out += "  " + std::to_string(e.follower) + " -> " + std::to_string(e.followed) + ";\n";
    }
    out += "}\n";
    return out;
}

std::string export_json(const DirectedNetwork& net, const CoreAnalysis& analysis, const EquilibriumResult& eq) {
    nlohmann::ordered_json doc;
    doc["n"] = net.size();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : net.edges()) edges.push_back({e.follower, e.followed});
    doc["edges"] = std::move(edges);
    doc["core"] = analysis.core;
    doc["b"] = eq.b;
    doc["lambda1"] = eq.lambda1;
    return doc.dump(2) + "\n";
}

}  // namespace

std::string export_snapshot(const DirectedNetwork& net, const CoreAnalysis& analysis, const EquilibriumResult& eq,
                            SnapshotFormat format) {
    return format == SnapshotFormat::Dot ? export_dot(net, analysis, eq) : export_json(net, analysis, eq);
}

DirectedNetwork import_snapshot_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset -> line number
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) line += text[i] == '\n';
        throw ParseError(e.what(), line);
    }
    try {
        const auto n = doc.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [follower, followed] pairs", 0);
            edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>()});
        }
        return DirectedNetwork::from_edges(n, edges);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed snapshot: ") + e.what(), 0);
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& e) {
        throw ParseError(std::string("invalid snapshot: ") + e.what(), 0);
    }
}

}  // namespace repnet
