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

#ifndef GSV_GRAPH_H
#define GSV_GRAPH_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gsv {

/// One adjacency row, or any other subset of vertices, packed into a single word.
/// Bit i corresponds to vertex i (0-based).
using VertexMask = std::uint32_t;

/// A simple undirected graph on at most `Graph::kMaxVertices` vertices.
///
/// The graph is stored as its GF(2) adjacency matrix with one word per row. It is
/// always symmetric with a zero diagonal. Values are immutable; every edit returns a
/// new graph.
///
/// The C++ API is 0-based. The text surfaces (graph IDs, JSON, CLI, HTTP) are 1-based.
class Graph {
   public:
    static constexpr std::size_t kMaxVertices = 32;

    /// The edgeless graph on `num_vertices` vertices. Throws DomainError unless 1 <= n <= kMaxVertices.
    explicit Graph(std::size_t num_vertices);
    /// Graph with the given (0-based) edges. Repeated edges are merged.
    static Graph from_edges(std::size_t num_vertices, std::span<const std::pair<std::size_t, std::size_t>> edges);
    static Graph from_edges(
        std::size_t num_vertices, std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
        return from_edges(num_vertices, std::span(edges.begin(), edges.size()));
    }

    std::size_t num_vertices() const {
        return n_;
    }
    VertexMask row(std::size_t i) const;
    std::span<const VertexMask> rows() const {
        return {rows_.data(), n_};
    }
    /// Mask with one bit set for every vertex.
    VertexMask all_vertices() const {
        return n_ == 32 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
    }

    bool has_edge(std::size_t i, std::size_t j) const;
    std::size_t degree(std::size_t i) const;
    std::size_t num_edges() const;
    /// Edges as (i, j) with i < j, in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Flips the pair (i, j). Throws LoopError when i == j.
    Graph with_edge_toggled(std::size_t i, std::size_t j) const;
    /// Appends an isolated vertex with index n.
    Graph with_vertex_added() const;
    /// Removes vertex i; vertices above i shift down by one.
    Graph with_vertex_removed(std::size_t i) const;
    /// Inverts the neighborhood of vertex i.
    Graph local_complement(std::size_t i) const;
    /// Induced subgraph on `vertices` (relabeled 0..k-1 in ascending order).
    Graph induced(VertexMask vertices) const;

    bool operator==(const Graph &other) const;

   private:
    Graph() = default;
    void check_vertex(std::size_t i) const;

    std::size_t n_ = 0;
    std::array<VertexMask, kMaxVertices> rows_{};
};

struct Component {
    VertexMask vertices;
    Graph graph;
};

/// Maximal connected vertex sets, ordered by their smallest vertex.
std::vector<Component> connected_components(const Graph &g);

/// Size of the largest connected component.
std::size_t largest_component_size(const Graph &g);

enum class SldType { TypeI, TypeII };

struct GraphProperties {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t component_count = 0;
    std::size_t isolated_vertex_count = 0;
    std::vector<std::size_t> degree_sequence;
    SldType sld_type = SldType::TypeI;
    bool connected = false;
};

GraphProperties graph_properties(const Graph &g);

/// TypeII iff every vertex has odd degree.
SldType sld_type(const Graph &g);

enum class DegreeParity { Even, Odd };

std::vector<DegreeParity> parity_coloring(const Graph &g);

/// An edge maximizing deg(i) + deg(j); ties go to the lexicographically smallest (i, j).
/// Empty when the graph has no edges.
std::optional<std::pair<std::size_t, std::size_t>> distillation_pair(const Graph &g);

}  // namespace gsv

#endif
