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

#ifndef GSV_SLD_H
#define GSV_SLD_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gsv/graph.h"

namespace gsv {

/// Largest connected component whose SLD will be computed at all, forced or not.
constexpr std::size_t kSldHardCap = 28;
/// Largest connected component computed without an explicit force flag.
constexpr std::size_t kSldAutoLimit = 16;
/// Largest qubit count an Sld can describe: the counts sum to 2^n and must fit 64 bits.
constexpr std::size_t kSldMaxQubits = 63;

/// Sector length distribution A_0..A_n of an n-qubit stabilizer state.
///
/// For a graph state, A_k counts stabilizers of weight k; it is an LU invariant.
struct Sld {
    std::vector<std::uint64_t> counts{1};

    std::size_t num_qubits() const {
        return counts.size() - 1;
    }
    std::uint64_t operator[](std::size_t k) const {
        return counts[k];
    }
    bool operator==(const Sld &) const = default;
};

/// Binomials C(n, k), k = 0..n: the SLD of n unentangled qubits.
Sld product_state_sld(std::size_t n);

/// Convolution of two SLDs: the SLD of the tensor product.
Sld sld_combine(const Sld &a, const Sld &b);

struct KernelOptions {
    /// Number of worker threads. The histogram is bit-identical for every value.
    unsigned threads = 1;
};

/// Counts r ∈ F_2^n by swt(r, Γr), enumerating r in Gray-code order with Γr updated by
/// one row XOR per step. Works on any graph, connected or not.
/// Throws CapExceeded when the graph has more than kSldHardCap vertices.
Sld sld_bruteforce(const Graph &g, KernelOptions options = {});

/// Histogram over the Gray-code positions [begin, end). Exposed for the parallel
/// partition contract: summing any partition of [0, 2^n) gives sld_bruteforce.
std::vector<std::uint64_t> sld_kernel_range(const Graph &g, std::uint64_t begin, std::uint64_t end);

/// SLD of the whole graph: brute force per connected component, folded with sld_combine.
/// Throws CapExceeded when some component exceeds kSldHardCap.
Sld sld_of_graph(const Graph &g, KernelOptions options = {});

enum class ComputePolicy { Auto, RequiresForce };

/// Auto iff the largest connected component has at most kSldAutoLimit vertices.
ComputePolicy auto_compute_policy(const Graph &g);

/// SLD after an independent depolarizing channel with probability p on every qubit.
struct DecayedSld {
    double p = 0;
    std::vector<double> values;
};

/// values[k] = (1 - p)^{2k} A_k. Throws DomainError unless 0 <= p <= 1.
DecayedSld decay(const Sld &sld, double p);

/// Throws std::logic_error when an invariant (Σ = 2^n, A_0 = 1) fails.
void check_sld_invariants(const Sld &sld);

}  // namespace gsv

#endif
