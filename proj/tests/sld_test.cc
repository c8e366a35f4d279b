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

#include <bit>
#include <gtest/gtest.h>
#include <random>

#include "gsv/closed_forms.h"
#include "gsv/errors.h"
#include "gsv/generators.h"
#include "gsv/stabilizer.h"
#include "oracle/statevector.h"

using namespace gsv;

namespace {

Sld make(std::vector<std::uint64_t> counts) {
    return Sld{std::move(counts)};
}

/// Direct count over r in binary order, computing Γr from scratch each time.
std::vector<std::uint64_t> naive_sld(const Graph &g) {
    std::size_t n = g.num_vertices();
    std::vector<std::uint64_t> a(n + 1, 0);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); r++) {
        VertexMask s = 0;
        for (std::size_t i = 0; i < n; i++) {
            int bit = 0;
            for (std::size_t j = 0; j < n; j++) {
                bit ^= g.has_edge(i, j) && ((r >> j) & 1);
            }
            s |= static_cast<VertexMask>(bit) << i;
        }
        a[std::popcount(static_cast<VertexMask>(r) | s)]++;
    }
    return a;
}

}  // namespace

TEST(sld, bruteforce_known_values) {
    EXPECT_EQ(sld_bruteforce(path(3)), make({1, 0, 3, 4}));
    EXPECT_EQ(sld_bruteforce(star(3)), make({1, 0, 3, 4}));
    for (std::size_t n = 1; n <= 10; n++) {
        EXPECT_EQ(sld_bruteforce(edgeless(n)), product_state_sld(n));
    }
    // Frozen from an independent numpy enumeration.
    EXPECT_EQ(sld_bruteforce(ring(6)), make({1, 0, 0, 8, 21, 24, 10}));
    EXPECT_EQ(sld_bruteforce(ring(5)), make({1, 0, 0, 10, 15, 6}));
    EXPECT_EQ(sld_bruteforce(path(4)), make({1, 0, 2, 8, 5}));
    EXPECT_EQ(oracle::sld_statevector(ring(6)), sld_bruteforce(ring(6)).counts);
}

TEST(sld, bruteforce_matches_naive_enumeration) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; trial++) {
        Graph g = random_graph(1 + rng() % 14, 0.4, rng());
        EXPECT_EQ(sld_bruteforce(g).counts, naive_sld(g));
    }
}

TEST(sld, bruteforce_cap) {
    EXPECT_THROW(sld_bruteforce(Graph(29)), CapExceeded);
    EXPECT_THROW(sld_of_graph(path(29)), CapExceeded);
    // 29 isolated vertices are fine: every component has one vertex.
    EXPECT_EQ(sld_of_graph(Graph(29)), product_state_sld(29));
}

TEST(sld, kernel_partitions_are_additive) {
    Graph g = random_graph(12, 0.5, 77);
    std::uint64_t total = 1 << 12;
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; trial++) {
        std::uint64_t a = rng() % total, b = rng() % total;
        if (a > b) {
            std::swap(a, b);
        }
        auto h1 = sld_kernel_range(g, 0, a);
        auto h2 = sld_kernel_range(g, a, b);
        auto h3 = sld_kernel_range(g, b, total);
        std::vector<std::uint64_t> sum(13, 0);
        for (std::size_t k = 0; k <= 12; k++) {
            sum[k] = h1[k] + h2[k] + h3[k];
        }
        EXPECT_EQ(sum, sld_bruteforce(g).counts);
    }
    EXPECT_THROW(sld_kernel_range(g, 5, 3), DomainError);
    EXPECT_THROW(sld_kernel_range(g, 0, total + 1), DomainError);
}

TEST(sld, threads_are_bit_identical) {
    Graph g = random_graph(18, 0.3, 5);
    Sld single = sld_bruteforce(g, {1});
    for (unsigned t : {2u, 3u, 7u, 16u}) {
        EXPECT_EQ(sld_bruteforce(g, {t}), single) << t;
    }
    EXPECT_EQ(sld_bruteforce(Graph(1), {8}), make({1, 1}));
}

TEST(sld, combine) {
    EXPECT_EQ(sld_combine(make({1, 1}), make({1, 1})), make({1, 2, 1}));
    EXPECT_EQ(sld_combine(make({1, 0, 3}), make({1, 2, 1})), make({1, 2, 4, 6, 3}));
    EXPECT_EQ(sld_combine(make({1, 0, 3, 4}), make({1})), make({1, 0, 3, 4}));
    EXPECT_THROW(sld_combine(product_state_sld(40), product_state_sld(30)), DomainError);
}

TEST(sld, of_graph) {
    EXPECT_EQ(sld_of_graph(edgeless(4)), make({1, 4, 6, 4, 1}));
    Graph two_bells = Graph::from_edges(4, {{0, 1}, {2, 3}});
    EXPECT_EQ(sld_of_graph(two_bells), make({1, 0, 6, 0, 9}));
    EXPECT_EQ(sld_of_graph(ring(6)), sld_bruteforce(ring(6)));
    // 0-2 plus isolated vertex 1.
    EXPECT_EQ(sld_of_graph(Graph::from_edges(3, {{0, 2}})), make({1, 1, 3, 3}));
}

TEST(sld, of_graph_matches_whole_graph_bruteforce) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; trial++) {
        Graph g = random_graph(1 + rng() % 16, 0.15, rng());
        EXPECT_EQ(sld_of_graph(g), sld_bruteforce(g));
    }
}

TEST(sld, structural_invariants) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; trial++) {
        Graph g = random_graph(1 + rng() % 10, 0.35, rng());
        Sld a = sld_of_graph(g);
        EXPECT_NO_THROW(check_sld_invariants(a));
        EXPECT_EQ(a[1], graph_properties(g).isolated_vertex_count);
        for (std::size_t v = 0; v < g.num_vertices(); v++) {
            EXPECT_EQ(sld_of_graph(g.local_complement(v)), a);
        }
        std::uint64_t odd = 0, even = 0;
        for (std::size_t k = 0; k <= a.num_qubits(); k++) {
            (k % 2 ? odd : even) += a[k];
        }
        if (sld_type(g) == SldType::TypeII) {
            EXPECT_EQ(odd, 0u);
        } else {
            EXPECT_EQ(odd, even);
        }
    }
}

TEST(sld, ghz_class) {
    for (std::size_t n = 2; n <= 10; n++) {
        EXPECT_EQ(sld_of_graph(star(n)), ghz_sld(n));
        EXPECT_EQ(sld_of_graph(complete(n)), ghz_sld(n));
    }
}

TEST(sld, statevector_oracle_exhaustive_small) {
    for (std::size_t n = 1; n <= 4; n++) {
        std::size_t pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); mask++) {
            std::vector<std::pair<std::size_t, std::size_t>> edges;
            std::size_t bit = 0;
            for (std::size_t i = 0; i < n; i++) {
                for (std::size_t j = i + 1; j < n; j++, bit++) {
                    if ((mask >> bit) & 1) {
                        edges.emplace_back(i, j);
                    }
                }
            }
            Graph g = Graph::from_edges(n, edges);
            EXPECT_EQ(oracle::sld_statevector(g), sld_of_graph(g).counts);
        }
    }
    EXPECT_EQ(oracle::sld_statevector(Graph(2)), (std::vector<std::uint64_t>{1, 2, 1}));
    EXPECT_THROW(oracle::sld_statevector(Graph(7)), std::runtime_error);
}

TEST(sld, auto_policy) {
    EXPECT_EQ(auto_compute_policy(path(16)), ComputePolicy::Auto);
    EXPECT_EQ(auto_compute_policy(path(17)), ComputePolicy::RequiresForce);
    Graph mixed = ring(10);
    for (int k = 0; k < 20; k++) {
        mixed = mixed.with_vertex_added();
    }
    EXPECT_EQ(auto_compute_policy(mixed), ComputePolicy::Auto);
}

TEST(sld, decay) {
    Sld a = make({1, 0, 3, 4});
    EXPECT_EQ(decay(a, 0.0).values, (std::vector<double>{1, 0, 3, 4}));
    EXPECT_EQ(decay(a, 1.0).values, (std::vector<double>{1, 0, 0, 0}));
    auto half = decay(a, 0.5).values;
    EXPECT_DOUBLE_EQ(half[2], 0.1875);
    EXPECT_DOUBLE_EQ(half[3], 0.0625);
    EXPECT_THROW(decay(a, -0.01), DomainError);
    EXPECT_THROW(decay(a, 1.01), DomainError);

    Sld r = sld_of_graph(ring(6));
    for (double p = 0.0; p <= 1.0; p += 0.05) {
        auto v = decay(r, p).values;
        EXPECT_EQ(v[0], 1.0);
        for (std::size_t k = 0; k < v.size(); k++) {
            EXPECT_NEAR(v[k], std::pow(1 - p, 2.0 * k) * r[k], 1e-12);
        }
    }
    for (std::size_t k = 1; k < r.counts.size(); k++) {
        if (r[k] == 0) {
            continue;
        }
        double prev = decay(r, 0.01).values[k];
        for (double p = 0.02; p < 1.0; p += 0.01) {
            double cur = decay(r, p).values[k];
            EXPECT_LT(cur, prev);
            prev = cur;
        }
    }
}
