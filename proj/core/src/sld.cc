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

#include "gsv/sld.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "gsv/errors.h"
#include "gsv/stabilizer.h"

namespace gsv {

namespace {

void check_hard_cap(std::size_t size) {
    if (size > kSldHardCap) {
        throw CapExceeded(
            "SLD computation is limited to connected components of at most " + std::to_string(kSldHardCap) +
                " vertices, got " + std::to_string(size) + ".",
            size, kSldHardCap);
    }
}

}  // namespace

Sld product_state_sld(std::size_t n) {
    if (n > kSldMaxQubits) {
        throw DomainError("SLDs are limited to " + std::to_string(kSldMaxQubits) + " qubits.");
    }
    Sld out;
    out.counts.assign(n + 1, 0);
    out.counts[0] = 1;
    for (std::size_t row = 1; row <= n; row++) {
        for (std::size_t k = row; k > 0; k--) {
            out.counts[k] += out.counts[k - 1];
        }
    }
    return out;
}

Sld sld_combine(const Sld &a, const Sld &b) {
    std::size_t n = a.num_qubits() + b.num_qubits();
    if (n > kSldMaxQubits) {
        throw DomainError(
            "combined SLD would describe " + std::to_string(n) + " qubits; the limit is " +
            std::to_string(kSldMaxQubits) + ".");
    }
    Sld out;
    out.counts.assign(n + 1, 0);
    for (std::size_t i = 0; i < a.counts.size(); i++) {
        for (std::size_t j = 0; j < b.counts.size(); j++) {
            out.counts[i + j] += a.counts[i] * b.counts[j];
        }
    }
    return out;
}

std::vector<std::uint64_t> sld_kernel_range(const Graph &g, std::uint64_t begin, std::uint64_t end) {
    std::size_t n = g.num_vertices();
    check_hard_cap(n);
    std::uint64_t total = std::uint64_t{1} << n;
    if (begin > end || end > total) {
        throw DomainError("kernel range out of bounds.");
    }
    std::vector<std::uint64_t> hist(n + 1, 0);
    if (begin == end) {
        return hist;
    }

    std::array<VertexMask, Graph::kMaxVertices> rows{};
    std::copy(g.rows().begin(), g.rows().end(), rows.begin());

    // Position t visits r = t ^ (t >> 1); consecutive positions differ in bit ctz(t + 1).
    VertexMask r = static_cast<VertexMask>(begin ^ (begin >> 1));
    VertexMask s = adjacency_times(g, r);
    std::array<std::uint64_t, Graph::kMaxVertices + 1> local{};
    for (std::uint64_t t = begin;;) {
        local[std::popcount(r | s)]++;
        if (++t == end) {
            break;
        }
        int bit = std::countr_zero(t);
        r ^= VertexMask{1} << bit;
        s ^= rows[bit];
    }
    std::copy(local.begin(), local.begin() + n + 1, hist.begin());
    return hist;
}

Sld sld_bruteforce(const Graph &g, KernelOptions options) {
    std::size_t n = g.num_vertices();
    check_hard_cap(n);
    std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t workers = std::clamp<std::uint64_t>(options.threads, 1, total);

    Sld out;
    if (workers == 1) {
        out.counts = sld_kernel_range(g, 0, total);
        return out;
    }

    std::vector<std::vector<std::uint64_t>> partial(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; w++) {
            std::uint64_t lo = total * w / workers;
            std::uint64_t hi = total * (w + 1) / workers;
            pool.emplace_back([&, w, lo, hi] {
                partial[w] = sld_kernel_range(g, lo, hi);
            });
        }
    }
    out.counts.assign(n + 1, 0);
    for (const auto &h : partial) {
        for (std::size_t k = 0; k <= n; k++) {
            out.counts[k] += h[k];
        }
    }
    return out;
}

Sld sld_of_graph(const Graph &g, KernelOptions options) {
    auto components = connected_components(g);
    for (const auto &c : components) {
        check_hard_cap(c.graph.num_vertices());
    }
    Sld out;
    for (const auto &c : components) {
        out = sld_combine(out, sld_bruteforce(c.graph, options));
    }
    return out;
}

ComputePolicy auto_compute_policy(const Graph &g) {
    return largest_component_size(g) <= kSldAutoLimit ? ComputePolicy::Auto : ComputePolicy::RequiresForce;
}

DecayedSld decay(const Sld &sld, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("depolarizing probability must be in [0, 1].");
    }
    DecayedSld out;
    out.p = p;
    out.values.reserve(sld.counts.size());
    double q = (1.0 - p) * (1.0 - p);
    for (std::size_t k = 0; k < sld.counts.size(); k++) {
        out.values.push_back(std::pow(q, static_cast<double>(k)) * static_cast<double>(sld.counts[k]));
    }
    return out;
}

void check_sld_invariants(const Sld &sld) {
    if (sld.counts.empty() || sld.counts[0] != 1) {
        throw std::logic_error("SLD must start with A_0 = 1.");
    }
    std::size_t n = sld.num_qubits();
    if (n > kSldMaxQubits) {
        throw std::logic_error("SLD has too many sectors.");
    }
    std::uint64_t sum = 0;
    for (auto a : sld.counts) {
        sum += a;
    }
    if (sum != (std::uint64_t{1} << n)) {
        throw std::logic_error("SLD entries must sum to 2^n.");
    }
}

}  // namespace gsv
