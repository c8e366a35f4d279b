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

#ifndef GSV_TESTS_ORACLE_STATEVECTOR_H
#define GSV_TESTS_ORACLE_STATEVECTOR_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gsv/graph.h"

// Dense statevector reference used only by tests. It builds |G> from its amplitudes
// and evaluates Pauli expectation values with explicit single-qubit matrices, sharing
// no code with the stabilizer or SLD engine.

namespace gsv::oracle {

constexpr std::size_t kMaxOracleQubits = 6;

/// 2^{-n/2} (-1)^{Σ_{j<k} b_j γ_jk b_k}, indexed by b with qubit k at bit k.
std::vector<double> graph_state_amplitudes(const Graph &g);

/// <G|P|G> for a Pauli string such as "-YXY" or "ZX1" (letters 1/I, X, Y, Z; optional
/// leading '-' or '+').
std::complex<double> expectation(const Graph &g, const std::string &pauli);

/// A_k = Σ_{wt(P)=k} <G|P|G>^2 over all 4^n Pauli strings, rounded to integers.
/// Throws std::runtime_error when n > kMaxOracleQubits or a sector is not within 1e-9
/// of an integer.
std::vector<std::uint64_t> sld_statevector(const Graph &g);

}  // namespace gsv::oracle

#endif
