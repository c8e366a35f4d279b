// Copyright 2026 The gsv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gsv/serialize.h"

#include <json.hpp>

#include "gsv/errors.h"
#include "gsv/graph_id.h"
#include "gsv/stabilizer.h"

namespace gsv {

namespace {

using nlohmann::json;

json graph_object(const Graph &g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) {
        edges.push_back({i + 1, j + 1});
    }
    return {{"n", g.num_vertices()}, {"edges", edges}};
}

json pauli_object(const PauliOperator &p) {
    return {{"sign", p.sign()}, {"paulis", pauli_letters(p)}};
}

}  // namespace

std::string_view sld_type_name(SldType type) {
    return type == SldType::TypeII ? "II" : "I";
}

std::string graph_json(const Graph &g) {
    return graph_object(g).dump();
}

Graph graph_from_json(std::string_view text) {
    try {
        json j = json::parse(text);
        auto n = j.at("n").get<std::size_t>();
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("each edge must be a pair [i, j].");
            }
            auto i = e[0].get<std::size_t>();
            auto k = e[1].get<std::size_t>();
            if (i < 1 || k < 1) {
                throw ParseError("vertex labels are 1-based.");
            }
            edges.emplace_back(i - 1, k - 1);
        }
        return Graph::from_edges(n, edges);
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed graph JSON: ") + e.what());
    } catch (const DomainError &e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what());
    }
}

std::string graph_document_json(const Graph &g) {
    auto props = graph_properties(g);
    json parity = json::array();
    for (auto c : parity_coloring(g)) {
        parity.push_back(c == DegreeParity::Odd ? "odd" : "even");
    }
    json pair = nullptr;
    if (auto p = distillation_pair(g)) {
        pair = {p->first + 1, p->second + 1};
    }
    json doc;
    doc["id"] = encode_graph_id(g);
    doc["graph"] = graph_object(g);
    doc["properties"] = {
        {"vertexCount", props.vertex_count},
        {"edgeCount", props.edge_count},
        {"componentCount", props.component_count},
        {"isolatedVertexCount", props.isolated_vertex_count},
        {"degreeSequence", props.degree_sequence},
        {"sldType", sld_type_name(props.sld_type)},
        {"connected", props.connected},
    };
    doc["parity"] = parity;
    doc["distillationPair"] = pair;
    doc["computePolicy"] = auto_compute_policy(g) == ComputePolicy::Auto ? "auto" : "requiresForce";
    return doc.dump();
}

std::string sld_json(const Sld &sld, SldType type, const std::optional<DecayedSld> &decayed) {
    json j;
    j["n"] = sld.num_qubits();
    j["A"] = sld.counts;
    j["type"] = sld_type_name(type);
    if (decayed) {
        j["p"] = decayed->p;
        j["values"] = decayed->values;
    }
    return j.dump();
}

std::string thresholds_json(const ThresholdReport &report) {
    json j;
    j["nSector"] = report.n_sector;
    j["majorization"] = report.majorization;
    j["distillation"] = report.distillation;
    return j.dump();
}

std::string pauli_json(const PauliOperator &p) {
    return pauli_object(p).dump();
}

std::string stabilizers_json(const Graph &g, std::size_t limit) {
    json list = json::array();
    auto range = enumerate_stabilizers(g);
    for (auto it = range.begin(); it != range.end() && list.size() < limit; ++it) {
        auto element = *it;
        json item = pauli_object(element.pauli);
        item["r"] = BitVector{g.num_vertices(), element.index}.str();
        item["weight"] = element.pauli.weight();
        list.push_back(std::move(item));
    }
    json j;
    j["n"] = g.num_vertices();
    j["total"] = range.size();
    j["stabilizers"] = list;
    return j.dump();
}

std::string error_json(int status, std::string_view message) {
    json j;
    j["status"] = status;
    j["error"] = message;
    return j.dump();
}

}  // namespace gsv
