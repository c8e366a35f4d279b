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

#ifndef GSV_STABILIZER_H
#define GSV_STABILIZER_H

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>

#include "gsv/graph.h"
#include "gsv/pauli.h"

namespace gsv {

/// Largest graph whose full stabilizer group may be streamed.
constexpr std::size_t kStabilizerEnumerationCap = 28;

/// The stabilizer (-1)^{Σ_{i<j} r_i γ_ij r_j} X^r Z^{Γr} of a graph state, indexed by r.
struct StabilizerElement {
    VertexMask index;
    PauliOperator pauli;
};

/// Γr over GF(2).
VertexMask adjacency_times(const Graph &g, VertexMask r);

/// Parity of the number of edges inside the support of r.
bool edge_parity(const Graph &g, VertexMask r);

StabilizerElement stabilizer_for(const Graph &g, VertexMask r);
/// Throws DomainError when r.size differs from the vertex count.
StabilizerElement stabilizer_for(const Graph &g, const BitVector &r);

/// Lazy view over all 2^n stabilizers in ascending order of r.
class StabilizerRange {
   public:
    class iterator {
       public:
        using iterator_category = std::input_iterator_tag;
        using value_type = StabilizerElement;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const Graph *g, std::uint64_t r) : g_(g), r_(r) {
        }
        StabilizerElement operator*() const {
            return stabilizer_for(*g_, static_cast<VertexMask>(r_));
        }
        iterator &operator++() {
            ++r_;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++r_;
            return copy;
        }
        bool operator==(const iterator &other) const {
            return r_ == other.r_;
        }

       private:
        const Graph *g_ = nullptr;
        std::uint64_t r_ = 0;
    };

    explicit StabilizerRange(const Graph &g);

    iterator begin() const {
        return {&g_, 0};
    }
    iterator end() const {
        return {&g_, std::uint64_t{1} << g_.num_vertices()};
    }
    std::uint64_t size() const {
        return std::uint64_t{1} << g_.num_vertices();
    }

   private:
    Graph g_;
};

/// Every stabilizer of the graph state. Throws CapExceeded for graphs above the enumeration cap.
StabilizerRange enumerate_stabilizers(const Graph &g);

struct Membership {
    VertexMask index;
    /// False when P matches the stabilizer only up to an overall sign.
    bool exact_sign;
};

/// Finds r with P = ±stabilizer_for(g, r), if any. That happens iff P.z = Γ P.x.
std::optional<Membership> membership(const Graph &g, const PauliOperator &p);

}  // namespace gsv

#endif
