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

#ifndef GSV_GENERATORS_H
#define GSV_GENERATORS_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsv/graph.h"

namespace gsv {

enum class GraphKind { Edgeless, Complete, Ring, Path, Star, Random };

std::string_view kind_name(GraphKind kind);
/// Accepts the lowercase names returned by kind_name. Throws DomainError otherwise.
GraphKind parse_kind(std::string_view name);
std::vector<GraphKind> all_kinds();

Graph edgeless(std::size_t n);
Graph complete(std::size_t n);
/// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
Graph ring(std::size_t n);
Graph path(std::size_t n);
/// Vertex 0 joined to every other vertex.
Graph star(std::size_t n);

/// Erdős–Rényi graph. Pairs (i, j), i < j, are visited in row-major order; each draws
/// u = (mt19937_64() >> 11) * 2^-53 and becomes an edge iff u < p. mt19937_64 is seeded
/// with `seed` directly, so the output is identical on every conforming platform.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Dispatches on kind. `p` and `seed` are required for Random and ignored otherwise.
Graph generate(GraphKind kind, std::size_t n, std::optional<double> p = {}, std::optional<std::uint64_t> seed = {});

}  // namespace gsv

#endif
