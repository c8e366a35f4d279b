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

#include "gsv/generators.h"

#include <random>

#include "gsv/errors.h"

namespace gsv {

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

constexpr GraphKind kKinds[] = {
    GraphKind::Edgeless, GraphKind::Complete, GraphKind::Ring, GraphKind::Path, GraphKind::Star, GraphKind::Random};

}  // namespace

std::string_view kind_name(GraphKind kind) {
    switch (kind) {
        case GraphKind::Edgeless:
            return "edgeless";
        case GraphKind::Complete:
            return "complete";
        case GraphKind::Ring:
            return "ring";
        case GraphKind::Path:
            return "path";
        case GraphKind::Star:
            return "star";
        case GraphKind::Random:
            return "random";
    }
    throw DomainError("unknown graph kind.");
}

GraphKind parse_kind(std::string_view name) {
    for (GraphKind k : kKinds) {
        if (kind_name(k) == name) {
            return k;
        }
    }
    throw DomainError("unknown graph kind '" + std::string(name) + "'.");
}

std::vector<GraphKind> all_kinds() {
    return {std::begin(kKinds), std::end(kKinds)};
}

Graph edgeless(std::size_t n) {
    return Graph(n);
}

Graph complete(std::size_t n) {
    EdgeList e;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            e.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, e);
}

Graph ring(std::size_t n) {
    if (n < 3) {
        throw DomainError("a ring needs at least 3 vertices, got " + std::to_string(n) + ".");
    }
    EdgeList e;
    for (std::size_t i = 0; i < n; i++) {
        e.emplace_back(i, (i + 1) % n);
    }
    return Graph::from_edges(n, e);
}

Graph path(std::size_t n) {
    EdgeList e;
    for (std::size_t i = 0; i + 1 < n; i++) {
        e.emplace_back(i, i + 1);
    }
    return Graph::from_edges(n, e);
}

Graph star(std::size_t n) {
    EdgeList e;
    for (std::size_t i = 1; i < n; i++) {
        e.emplace_back(0, i);
    }
    return Graph::from_edges(n, e);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("edge probability must be in [0, 1].");
    }
    std::mt19937_64 rng(seed);
    EdgeList e;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) {
                e.emplace_back(i, j);
            }
        }
    }
    return Graph::from_edges(n, e);
}

Graph generate(GraphKind kind, std::size_t n, std::optional<double> p, std::optional<std::uint64_t> seed) {
    switch (kind) {
        case GraphKind::Edgeless:
            return edgeless(n);
        case GraphKind::Complete:
            return complete(n);
        case GraphKind::Ring:
            return ring(n);
        case GraphKind::Path:
            return path(n);
        case GraphKind::Star:
            return star(n);
        case GraphKind::Random:
            if (!p || !seed) {
                throw DomainError("random graphs need both an edge probability and a seed.");
            }
            return random_graph(n, *p, *seed);
    }
    throw DomainError("unknown graph kind.");
}

}  // namespace gsv
