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

#include <benchmark/benchmark.h>

#include <random>

#include "gsv/closed_forms.h"
#include "gsv/generators.h"
#include "gsv/graph_id.h"
#include "gsv/sld.h"
#include "gsv/stabilizer.h"

namespace {

gsv::Graph connected_random(std::size_t n, std::uint64_t seed) {
    for (;; seed++) {
        gsv::Graph g = gsv::random_graph(n, 0.3, seed);
        if (gsv::connected_components(g).size() == 1) {
            return g;
        }
    }
}

void BM_sld_kernel(benchmark::State &state) {
    auto g = connected_random(static_cast<std::size_t>(state.range(0)), 1);
    gsv::KernelOptions options{static_cast<unsigned>(state.range(1))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsv::sld_bruteforce(g, options));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_sld_kernel)
    ->ArgsProduct({{12, 16, 20, 24}, {1}})
    ->Args({24, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_sld_of_disconnected_graph(benchmark::State &state) {
    gsv::Graph g(32);
    for (std::size_t i = 0; i + 3 < 32; i += 4) {
        g = g.with_edge_toggled(i, i + 1).with_edge_toggled(i + 1, i + 2).with_edge_toggled(i + 2, i + 3);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsv::sld_of_graph(g));
    }
}
BENCHMARK(BM_sld_of_disconnected_graph);

void BM_sld_combine(benchmark::State &state) {
    auto a = gsv::ghz_sld(static_cast<std::size_t>(state.range(0)));
    auto b = gsv::product_state_sld(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsv::sld_combine(a, b));
    }
}
BENCHMARK(BM_sld_combine)->Arg(8)->Arg(31);

void BM_graph_id_round_trip(benchmark::State &state) {
    auto g = gsv::random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsv::decode_graph_id(gsv::encode_graph_id(g)));
    }
}
BENCHMARK(BM_graph_id_round_trip)->Arg(8)->Arg(32);

void BM_stabilizer_enumeration(benchmark::State &state) {
    auto g = connected_random(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        std::size_t total = 0;
        for (auto e : gsv::enumerate_stabilizers(g)) {
            total += e.pauli.weight();
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_stabilizer_enumeration)->Arg(10)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
