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

#include "gsv/stabilizer.h"

#include <bit>

#include "gsv/errors.h"

namespace gsv {

VertexMask adjacency_times(const Graph &g, VertexMask r) {
    VertexMask s = 0;
    auto rows = g.rows();
    for (VertexMask rest = r & g.all_vertices(); rest; rest &= rest - 1) {
        s ^= rows[std::countr_zero(rest)];
    }
    return s;
}

bool edge_parity(const Graph &g, VertexMask r) {
    // Each internal edge is seen from both endpoints.
    std::size_t twice = 0;
    auto rows = g.rows();
    for (VertexMask rest = r & g.all_vertices(); rest; rest &= rest - 1) {
        twice += std::popcount(rows[std::countr_zero(rest)] & r);
    }
    return (twice / 2) % 2;
}

StabilizerElement stabilizer_for(const Graph &g, VertexMask r) {
    r &= g.all_vertices();
    PauliOperator p;
    p.num_qubits = g.num_vertices();
    p.x = r;
    p.z = adjacency_times(g, r);
    p.phase = edge_parity(g, r) ? 2 : 0;
    return {r, p};
}

StabilizerElement stabilizer_for(const Graph &g, const BitVector &r) {
    if (r.size != g.num_vertices()) {
        throw DomainError(
            "index vector has " + std::to_string(r.size) + " entries but the graph has " +
            std::to_string(g.num_vertices()) + " vertices.");
    }
    return stabilizer_for(g, r.bits);
}

StabilizerRange::StabilizerRange(const Graph &g) : g_(g) {
}

StabilizerRange enumerate_stabilizers(const Graph &g) {
    if (g.num_vertices() > kStabilizerEnumerationCap) {
        throw CapExceeded(
            "stabilizer enumeration is limited to " + std::to_string(kStabilizerEnumerationCap) + " qubits, got " +
                std::to_string(g.num_vertices()) + ".",
            g.num_vertices(), kStabilizerEnumerationCap);
    }
    return StabilizerRange(g);
}

std::optional<Membership> membership(const Graph &g, const PauliOperator &p) {
    if (p.num_qubits != g.num_vertices()) {
        throw DomainError(
            "Pauli operator acts on " + std::to_string(p.num_qubits) + " qubits but the graph has " +
            std::to_string(g.num_vertices()) + " vertices.");
    }
    if (adjacency_times(g, p.x) != p.z) {
        return std::nullopt;
    }
    auto element = stabilizer_for(g, p.x);
    return Membership{p.x, element.pauli.phase == p.phase};
}

}  // namespace gsv
