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

#ifndef GSV_SERIALIZE_H
#define GSV_SERIALIZE_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "gsv/graph.h"
#include "gsv/pauli.h"
#include "gsv/sld.h"
#include "gsv/thresholds.h"

// JSON documents shared by the HTTP API and the CLI. Keys are emitted in sorted
// order and doubles in shortest round-trip form, so equal inputs give equal bytes.
// Vertex labels are 1-based.

namespace gsv {

/// {"n": int, "edges": [[i, j], ...]} with i < j, sorted.
std::string graph_json(const Graph &g);
/// Inverse of graph_json. Throws ParseError on malformed documents.
Graph graph_from_json(std::string_view text);

/// Graph, its ID, properties, parity coloring and distillation pair.
std::string graph_document_json(const Graph &g);

/// {"n", "A", "type"}; with `decayed` also {"p", "values"}.
std::string sld_json(const Sld &sld, SldType type, const std::optional<DecayedSld> &decayed = std::nullopt);

/// {"nSector", "majorization", "distillation"}.
std::string thresholds_json(const ThresholdReport &report);

/// {"sign": ±1, "paulis": "ZXZ"}.
std::string pauli_json(const PauliOperator &p);

/// First `limit` stabilizers in ascending index order.
std::string stabilizers_json(const Graph &g, std::size_t limit);

std::string error_json(int status, std::string_view message);

std::string_view sld_type_name(SldType type);

}  // namespace gsv

#endif
