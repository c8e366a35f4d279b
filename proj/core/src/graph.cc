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

#include "gsv/graph.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gsv/errors.h"

namespace gsv {

Graph::Graph(std::size_t num_vertices) : n_(num_vertices) {
    if (num_vertices < 1 || num_vertices > kMaxVertices) {
        std::stringstream ss;
        ss << "vertex count must be in [1, " << kMaxVertices << "], got " << num_vertices << ".";
        throw DomainError(ss.str());
    }
}

Graph Graph::from_edges(std::size_t num_vertices, std::span<const std::pair<std::size_t, std::size_t>> edges) {
    Graph g(num_vertices);
    for (auto [i, j] : edges) {
        g.check_vertex(i);
        g.check_vertex(j);
        if (i == j) {
            throw LoopError("simple graphs cannot contain loops (vertex " + std::to_string(i) + ").");
        }
        g.rows_[i] |= VertexMask{1} << j;
        g.rows_[j] |= VertexMask{1} << i;
    }
    return g;
}

void Graph::check_vertex(std::size_t i) const {
    if (i >= n_) {
        std::stringstream ss;
        ss << "vertex index " << i << " out of range for a graph with " << n_ << " vertices.";
        throw DomainError(ss.str());
    }
}

VertexMask Graph::row(std::size_t i) const {
    check_vertex(i);
    return rows_[i];
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
    check_vertex(i);
    check_vertex(j);
    return (rows_[i] >> j) & 1;
}

std::size_t Graph::degree(std::size_t i) const {
    check_vertex(i);
    return std::popcount(rows_[i]);
}

std::size_t Graph::num_edges() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n_; i++) {
        total += std::popcount(rows_[i]);
    }
    return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t j = i + 1; j < n_; j++) {
            if ((rows_[i] >> j) & 1) {
                result.emplace_back(i, j);
            }
        }
    }
    return result;
}

Graph Graph::with_edge_toggled(std::size_t i, std::size_t j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) {
        throw LoopError("simple graphs cannot contain loops (vertex " + std::to_string(i) + ").");
    }
    Graph result = *this;
    result.rows_[i] ^= VertexMask{1} << j;
    result.rows_[j] ^= VertexMask{1} << i;
    return result;
}

Graph Graph::with_vertex_added() const {
    if (n_ >= kMaxVertices) {
        throw DomainError("cannot add a vertex: graph already has the maximum of 32 vertices.");
    }
    Graph result = *this;
    result.n_ = n_ + 1;
    return result;
}

Graph Graph::with_vertex_removed(std::size_t i) const {
    check_vertex(i);
    if (n_ < 2) {
        throw DomainError("cannot delete the only vertex of a graph.");
    }
    VertexMask low = (VertexMask{1} << i) - 1;
    auto squeeze = [&](VertexMask row) {
        return (row & low) | ((row >> 1) & ~low);
    };
    Graph result;
    result.n_ = n_ - 1;
    for (std::size_t k = 0, dst = 0; k < n_; k++) {
        if (k != i) {
            result.rows_[dst++] = squeeze(rows_[k]);
        }
    }
    return result;
}

Graph Graph::local_complement(std::size_t i) const {
    check_vertex(i);
    Graph result = *this;
    VertexMask nbhd = rows_[i];
    // Row j of the neighborhood gains/loses every other neighbor of i.
    for (VertexMask rest = nbhd; rest; rest &= rest - 1) {
        std::size_t j = std::countr_zero(rest);
        result.rows_[j] ^= nbhd & ~(VertexMask{1} << j);
    }
    return result;
}

Graph Graph::induced(VertexMask vertices) const {
    vertices &= all_vertices();
    if (vertices == 0) {
        throw DomainError("induced subgraph needs at least one vertex.");
    }
    std::array<std::size_t, kMaxVertices> new_index{};
    std::size_t count = 0;
    for (std::size_t k = 0; k < n_; k++) {
        if ((vertices >> k) & 1) {
            new_index[k] = count++;
        }
    }
    Graph result(count);
    for (std::size_t k = 0; k < n_; k++) {
        if (!((vertices >> k) & 1)) {
            continue;
        }
        VertexMask out = 0;
        for (VertexMask nb = rows_[k] & vertices; nb; nb &= nb - 1) {
            out |= VertexMask{1} << new_index[std::countr_zero(nb)];
        }
        result.rows_[new_index[k]] = out;
    }
    return result;
}

bool Graph::operator==(const Graph &other) const {
    if (n_ != other.n_) {
        return false;
    }
    for (std::size_t k = 0; k < n_; k++) {
        if (rows_[k] != other.rows_[k]) {
            return false;
        }
    }
    return true;
}

std::vector<Component> connected_components(const Graph &g) {
    std::vector<Component> result;
    VertexMask unvisited = g.all_vertices();
    while (unvisited) {
        VertexMask seed = unvisited & (~unvisited + 1);
        VertexMask reached = seed;
        VertexMask frontier = seed;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask f = frontier; f; f &= f - 1) {
                next |= g.rows()[std::countr_zero(f)];
            }
            frontier = next & ~reached;
            reached |= frontier;
        }
        unvisited &= ~reached;
        result.push_back(Component{reached, g.induced(reached)});
    }
    return result;
}

std::size_t largest_component_size(const Graph &g) {
    std::size_t best = 0;
    for (const auto &c : connected_components(g)) {
        best = std::max<std::size_t>(best, std::popcount(c.vertices));
    }
    return best;
}

SldType sld_type(const Graph &g) {
    for (VertexMask row : g.rows()) {
        if (std::popcount(row) % 2 == 0) {
            return SldType::TypeI;
        }
    }
    return SldType::TypeII;
}

GraphProperties graph_properties(const Graph &g) {
    GraphProperties p;
    p.vertex_count = g.num_vertices();
    p.edge_count = g.num_edges();
    p.component_count = connected_components(g).size();
    for (VertexMask row : g.rows()) {
        std::size_t d = std::popcount(row);
        p.degree_sequence.push_back(d);
        if (d == 0) {
            p.isolated_vertex_count++;
        }
    }
    p.sld_type = sld_type(g);
    p.connected = p.component_count == 1;
    return p;
}

std::vector<DegreeParity> parity_coloring(const Graph &g) {
    std::vector<DegreeParity> colors;
    colors.reserve(g.num_vertices());
    for (VertexMask row : g.rows()) {
        colors.push_back(std::popcount(row) % 2 ? DegreeParity::Odd : DegreeParity::Even);
    }
    return colors;
}

std::optional<std::pair<std::size_t, std::size_t>> distillation_pair(const Graph &g) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t best_sum = 0;
    // edges() is lexicographic, so a strict comparison keeps the smallest maximizer.
    for (auto [i, j] : g.edges()) {
        std::size_t sum = g.degree(i) + g.degree(j);
        if (!best || sum > best_sum) {
            best = {i, j};
            best_sum = sum;
        }
    }
    return best;
}

}  // namespace gsv
