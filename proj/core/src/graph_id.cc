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

#include "gsv/graph_id.h"

#include <charconv>

#include "gsv/errors.h"

namespace gsv {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

}  // namespace

std::size_t graph_id_hex_length(std::size_t n) {
    std::size_t bits = n * (n - 1) / 2;
    return (bits + 3) / 4;
}

std::string encode_graph_id(const Graph &g) {
    std::size_t n = g.num_vertices();
    std::string hex(graph_id_hex_length(n), '0');
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++, bit++) {
            if ((g.rows()[i] >> j) & 1) {
                std::size_t nibble = bit / 4;
                int value = hex_value(hex[nibble]) | (8 >> (bit % 4));
                hex[nibble] = kHexDigits[value];
            }
        }
    }
    return std::to_string(n) + ":" + hex;
}

Graph decode_graph_id(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) {
        throw ParseError("graph ID must look like '<n>:<hex>', got '" + std::string(text) + "'.");
    }
    std::size_t n = 0;
    auto count_text = text.substr(0, colon);
    auto [end, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), n);
    if (ec != std::errc{} || end != count_text.data() + count_text.size()) {
        throw ParseError("graph ID vertex count is not a decimal number: '" + std::string(count_text) + "'.");
    }
    if (n < 1 || n > Graph::kMaxVertices) {
        throw ParseError("graph ID vertex count must be in [1, 32], got " + std::to_string(n) + ".");
    }
    auto hex = text.substr(colon + 1);
    if (hex.size() != graph_id_hex_length(n)) {
        throw ParseError(
            "graph ID for " + std::to_string(n) + " vertices needs " + std::to_string(graph_id_hex_length(n)) +
            " hex digits, got " + std::to_string(hex.size()) + ".");
    }

    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++, bit++) {
            int value = hex_value(hex[bit / 4]);
            if (value < 0) {
                throw ParseError("graph ID contains a non-hex character '" + std::string(1, hex[bit / 4]) + "'.");
            }
            if (value & (8 >> (bit % 4))) {
                g = g.with_edge_toggled(i, j);
            }
        }
    }
    // Remaining bits of the last nibble are padding.
    for (; bit < hex.size() * 4; bit++) {
        int value = hex_value(hex[bit / 4]);
        if (value < 0) {
            throw ParseError("graph ID contains a non-hex character '" + std::string(1, hex[bit / 4]) + "'.");
        }
        if (value & (8 >> (bit % 4))) {
            throw ParseError("graph ID has nonzero padding bits.");
        }
    }
    return g;
}

GraphId GraphId::parse(std::string_view text) {
    return GraphId::of(decode_graph_id(text));
}

GraphId GraphId::of(const Graph &g) {
    return GraphId(encode_graph_id(g));
}

Graph GraphId::graph() const {
    return decode_graph_id(text_);
}

}  // namespace gsv
