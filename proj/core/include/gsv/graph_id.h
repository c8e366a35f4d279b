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

#ifndef GSV_GRAPH_ID_H
#define GSV_GRAPH_ID_H

#include <string>
#include <string_view>

#include "gsv/graph.h"

namespace gsv {

/// Compact text name of a graph: `<n>:<hex>`.
///
/// The hex part holds the upper triangle of the adjacency matrix in row-major order
/// (γ12 γ13 ... γ1n γ23 ... γ(n-1)n), packed most-significant-bit first into nibbles
/// and zero-padded at the end. It has ceil(n(n-1)/8) lowercase digits. Example: K2 is "2:8".
class GraphId {
   public:
    /// Validates the text. Throws ParseError when malformed.
    static GraphId parse(std::string_view text);
    static GraphId of(const Graph &g);

    const std::string &str() const {
        return text_;
    }
    Graph graph() const;

    bool operator==(const GraphId &) const = default;
    auto operator<=>(const GraphId &) const = default;

   private:
    explicit GraphId(std::string text) : text_(std::move(text)) {
    }
    std::string text_;
};

std::string encode_graph_id(const Graph &g);
Graph decode_graph_id(std::string_view text);

/// Number of hex digits used for an n-vertex graph.
std::size_t graph_id_hex_length(std::size_t n);

}  // namespace gsv

#endif
