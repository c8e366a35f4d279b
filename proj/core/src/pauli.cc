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

#include "gsv/pauli.h"

#include <bit>
#include <stdexcept>

#include "gsv/errors.h"

namespace gsv {

BitVector BitVector::parse(std::string_view text) {
    if (text.size() > 32) {
        throw ParseError("bit vectors hold at most 32 entries.");
    }
    BitVector v{text.size(), 0};
    for (std::size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            v.bits |= VertexMask{1} << k;
        } else if (text[k] != '0') {
            throw ParseError("bit vector may only contain '0' and '1', got '" + std::string(text) + "'.");
        }
    }
    return v;
}

std::string BitVector::str() const {
    std::string out(size, '0');
    for (std::size_t k = 0; k < size; k++) {
        if ((bits >> k) & 1) {
            out[k] = '1';
        }
    }
    return out;
}

std::size_t symplectic_weight(VertexMask r, VertexMask s) {
    return std::popcount(r | s);
}

std::size_t symplectic_weight(const BitVector &r, const BitVector &s) {
    if (r.size != s.size) {
        throw DomainError(
            "symplectic weight needs equal-length vectors, got " + std::to_string(r.size) + " and " +
            std::to_string(s.size) + ".");
    }
    return symplectic_weight(r.bits, s.bits);
}

PauliOperator PauliOperator::parse(std::string_view text) {
    PauliOperator p;
    std::size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') {
            p.phase += 2;
        }
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        p.phase += 1;
        k++;
    }
    auto letters = text.substr(k);
    if (letters.empty() || letters.size() > 32) {
        throw ParseError("Pauli string needs between 1 and 32 letters, got '" + std::string(text) + "'.");
    }
    p.num_qubits = letters.size();
    for (std::size_t q = 0; q < letters.size(); q++) {
        VertexMask bit = VertexMask{1} << q;
        switch (letters[q]) {
            case '1':
            case 'I':
            case '_':
                break;
            case 'X':
                p.x |= bit;
                break;
            case 'Z':
                p.z |= bit;
                break;
            case 'Y':
                p.x |= bit;
                p.z |= bit;
                p.phase += 1;
                break;
            default:
                throw ParseError("invalid Pauli letter '" + std::string(1, letters[q]) + "' in '" + std::string(text) + "'.");
        }
    }
    p.phase %= 4;
    return p;
}

std::size_t PauliOperator::num_y() const {
    return std::popcount(x & z);
}

std::uint8_t PauliOperator::letter_phase() const {
    // Each XZ pair equals -iY, so i^q X^x Z^z = i^(q - #Y) ⊗ letters.
    return static_cast<std::uint8_t>((phase + 4 - num_y() % 4) % 4);
}

int PauliOperator::sign() const {
    switch (letter_phase()) {
        case 0:
            return +1;
        case 2:
            return -1;
        default:
            throw std::logic_error("Pauli operator has an imaginary overall phase: " + render_pauli(*this));
    }
}

PauliOperator PauliOperator::operator*(const PauliOperator &other) const {
    if (num_qubits != other.num_qubits) {
        throw DomainError("cannot multiply Pauli operators of different lengths.");
    }
    // Z^z X^x' = (-1)^{z·x'} X^x' Z^z
    int commute_sign = std::popcount(z & other.x) % 2;
    PauliOperator out;
    out.num_qubits = num_qubits;
    out.phase = static_cast<std::uint8_t>((phase + other.phase + 2 * commute_sign) % 4);
    out.x = x ^ other.x;
    out.z = z ^ other.z;
    return out;
}

std::string pauli_letters(const PauliOperator &p) {
    std::string out(p.num_qubits, '1');
    for (std::size_t q = 0; q < p.num_qubits; q++) {
        bool xb = (p.x >> q) & 1;
        bool zb = (p.z >> q) & 1;
        out[q] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : '1');
    }
    return out;
}

std::string render_pauli(const PauliOperator &p) {
    static constexpr const char *kPrefix[] = {"", "i", "-", "-i"};
    return kPrefix[p.letter_phase()] + pauli_letters(p);
}

}  // namespace gsv
