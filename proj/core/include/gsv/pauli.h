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

#ifndef GSV_PAULI_H
#define GSV_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "gsv/graph.h"

namespace gsv {

/// A fixed-length vector over GF(2), at most 32 entries. Entry k is bit k of `bits`.
struct BitVector {
    std::size_t size = 0;
    VertexMask bits = 0;

    /// Parses a string of '0'/'1' characters; the first character is entry 0.
    static BitVector parse(std::string_view text);
    std::string str() const;
    bool operator==(const BitVector &) const = default;
};

/// Number of positions where r or s is set.
std::size_t symplectic_weight(VertexMask r, VertexMask s);
/// Throws DomainError when the lengths differ.
std::size_t symplectic_weight(const BitVector &r, const BitVector &s);

/// The operator i^phase X^x Z^z on `num_qubits` qubits, where X^x = ⊗ X^{x_k}.
///
/// `phase` counts factors of i mod 4. A Y factor is stored as x = z = 1 with the
/// compensating i folded into `phase` (Y = iXZ).
struct PauliOperator {
    std::size_t num_qubits = 0;
    std::uint8_t phase = 0;
    VertexMask x = 0;
    VertexMask z = 0;

    static PauliOperator identity(std::size_t num_qubits) {
        return {num_qubits, 0, 0, 0};
    }

    /// Parses e.g. "ZXZ", "-YXY", "+X1Z", "iXZ". Identity factors may be written '1', 'I' or '_'.
    static PauliOperator parse(std::string_view text);

    std::size_t weight() const {
        return symplectic_weight(x, z);
    }
    std::size_t num_y() const;

    /// Exponent e such that the operator equals i^e times a tensor product of {1,X,Y,Z}.
    std::uint8_t letter_phase() const;
    bool is_hermitian() const {
        return letter_phase() % 2 == 0;
    }
    /// +1 or -1 in front of the letter string. Throws std::logic_error for anti-Hermitian operators.
    int sign() const;

    /// Operator product (this * other).
    PauliOperator operator*(const PauliOperator &other) const;
    bool operator==(const PauliOperator &) const = default;
};

/// Renders the letter form, e.g. "-YXY". Only a negative sign is printed; an
/// imaginary overall phase is printed as "i" or "-i".
std::string render_pauli(const PauliOperator &p);

/// Letters only, without any phase prefix.
std::string pauli_letters(const PauliOperator &p);

}  // namespace gsv

#endif
