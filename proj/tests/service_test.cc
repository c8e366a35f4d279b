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

#include "gsv/service.h"

#include <fstream>
#include <gtest/gtest.h>
#include <sstream>
#include <thread>

#include "gsv/cache.h"
#include "gsv/closed_forms.h"
#include "gsv/errors.h"
#include "gsv/generators.h"
#include "gsv/graph_id.h"
#include "temp_path.h"

using namespace gsv;
using gsv::testing::TempPath;

namespace {

CacheRecord record(const Graph &g, const std::string &version = "v1") {
    return CacheRecord{encode_graph_id(g), sld_of_graph(g), 1700000000000, version};
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(cache, json_line_round_trip) {
    auto r = record(ring(6));
    std::string line = cache_record_to_json_line(r);
    EXPECT_EQ(line, R"({"A":[1,0,0,8,21,24,10],"computedAtMs":1700000000000,"engineVersion":"v1","key":"6:8c4a"})");
    auto back = cache_record_from_json_line(line);
    EXPECT_EQ(back.key, r.key);
    EXPECT_EQ(back.sld, r.sld);
    EXPECT_EQ(back.computed_at_ms, r.computed_at_ms);
    EXPECT_EQ(back.engine_version, r.engine_version);
    EXPECT_THROW(cache_record_from_json_line("{\"key\":1}"), ParseError);
    EXPECT_THROW(cache_record_from_json_line("not json"), ParseError);
}

TEST(cache, validation) {
    EXPECT_NO_THROW(validate_cache_record(record(path(4))));
    // Disconnected graphs are never cache keys.
    EXPECT_THROW(validate_cache_record(record(edgeless(3))), DomainError);
    auto bad = record(path(4));
    bad.sld.counts[2]++;
    EXPECT_THROW(validate_cache_record(bad), DomainError);
    bad = record(path(4));
    bad.key = "4:zz";
    EXPECT_THROW(validate_cache_record(bad), DomainError);
    bad = record(path(4));
    bad.sld = sld_of_graph(path(3));
    EXPECT_THROW(validate_cache_record(bad), DomainError);
}

TEST(cache, put_get_and_restart) {
    TempPath dir("cache");
    auto file = dir.path() / "sld.jsonl";
    {
        SldCache cache(file);
        EXPECT_EQ(cache.size(), 0u);
        EXPECT_FALSE(cache.get("6:8c4a").has_value());
        cache.put(record(ring(6)));
        cache.put(record(ring(6)));  // same value: no-op
        cache.put(record(complete(4)));
        EXPECT_EQ(cache.size(), 2u);
        auto hit = cache.get("6:8c4a");
        ASSERT_TRUE(hit.has_value());
        EXPECT_EQ(hit->sld, sld_of_graph(ring(6)));
    }
    // Two distinct records, two lines: re-putting does not append.
    auto content = read_file(file);
    EXPECT_EQ(std::count(content.begin(), content.end(), '\n'), 2);

    SldCache reopened(file);
    EXPECT_EQ(reopened.size(), 2u);
    EXPECT_EQ(reopened.get(encode_graph_id(complete(4)))->sld, ghz_sld(4));
}

TEST(cache, conflicting_put_is_refused) {
    TempPath dir("cache");
    SldCache cache(dir.path() / "sld.jsonl");
    cache.put(record(path(3)));
    auto forged = record(path(3));
    forged.sld = Sld{{1, 1, 3, 3}};
    EXPECT_THROW(cache.put(forged), IntegrityError);
    EXPECT_EQ(cache.get(forged.key)->sld, sld_of_graph(path(3)));
    // Another engine version may supersede the record.
    forged.engine_version = "v2";
    EXPECT_NO_THROW(cache.put(forged));
    EXPECT_EQ(cache.get(forged.key)->engine_version, "v2");
}

TEST(cache, torn_tail_is_ignored) {
    TempPath dir("cache");
    auto file = dir.path() / "sld.jsonl";
    {
        SldCache cache(file);
        cache.put(record(ring(5)));
    }
    {
        std::ofstream out(file, std::ios::app | std::ios::binary);
        out << R"({"A":[1,0,3,4],"computedAt)";
    }
    {
        SldCache cache(file);
        EXPECT_EQ(cache.size(), 1u);
        cache.put(record(path(3)));
    }
    SldCache cache(file);
    EXPECT_EQ(cache.size(), 2u);
    EXPECT_TRUE(cache.get(encode_graph_id(path(3))).has_value());
}

TEST(cache, unterminated_complete_record_is_kept) {
    TempPath dir("cache");
    std::filesystem::create_directories(dir.path());
    auto file = dir.path() / "sld.jsonl";
    {
        std::ofstream out(file, std::ios::binary);
        out << cache_record_to_json_line(record(ring(5)));
    }
    {
        SldCache cache(file);
        EXPECT_EQ(cache.size(), 1u);
        cache.put(record(ring(6)));
    }
    EXPECT_EQ(SldCache(file).size(), 2u);
}

TEST(cache, corrupt_interior_line_is_a_storage_error) {
    TempPath dir("cache");
    std::filesystem::create_directories(dir.path());
    auto file = dir.path() / "sld.jsonl";
    {
        std::ofstream out(file, std::ios::binary);
        out << "garbage\n" << cache_record_to_json_line(record(ring(5))) << "\n";
    }
    EXPECT_THROW(SldCache{file}, StorageError);
}

TEST(cache, concurrent_readers_and_writers) {
    TempPath dir("cache");
    SldCache cache(dir.path() / "sld.jsonl");
    std::vector<std::jthread> workers;
    for (int t = 0; t < 4; t++) {
        workers.emplace_back([&cache, t] {
            for (std::size_t n = 3; n <= 12; n++) {
                cache.put(record(ring(n)));
                auto hit = cache.get(encode_graph_id(ring(3 + (n + t) % 10)));
                if (hit) {
                    EXPECT_NO_THROW(check_sld_invariants(hit->sld));
                }
            }
        });
    }
    workers.clear();
    EXPECT_EQ(cache.size(), 10u);
}

TEST(service, computes_each_component_once) {
    TempPath dir("service");
    ServiceOptions options;
    options.cache_path = (dir.path() / "sld.jsonl").string();
    SldService service(options);
    EXPECT_EQ(service.sld(ring(6)), sld_of_graph(ring(6)));
    EXPECT_EQ(service.compute_count(), 1u);
    service.sld(ring(6));
    service.thresholds(ring(6));
    EXPECT_EQ(service.compute_count(), 1u);

    // Two Bell pairs share the component key 2:8; isolated vertices are keyed as 1:.
    Graph bells = Graph::from_edges(5, {{0, 1}, {2, 3}});
    EXPECT_EQ(service.sld(bells), sld_of_graph(bells));
    EXPECT_EQ(service.compute_count(), 3u);
    EXPECT_EQ(service.cache()->size(), 3u);
}

TEST(service, restart_serves_from_cache) {
    TempPath dir("service");
    ServiceOptions options;
    options.cache_path = (dir.path() / "sld.jsonl").string();
    {
        SldService service(options);
        service.sld(path(10));
        service.sld(complete(12));
        EXPECT_EQ(service.compute_count(), 2u);
    }
    SldService restarted(options);
    EXPECT_EQ(restarted.sld(path(10)), sld_of_graph(path(10)));
    EXPECT_EQ(restarted.sld(complete(12)), ghz_sld(12));
    EXPECT_EQ(restarted.compute_count(), 0u);
}

TEST(service, engine_version_change_recomputes) {
    TempPath dir("service");
    ServiceOptions options;
    options.cache_path = (dir.path() / "sld.jsonl").string();
    options.engine_version = "old";
    {
        SldService service(options);
        service.sld(ring(7));
    }
    options.engine_version = "new";
    SldService upgraded(options);
    upgraded.sld(ring(7));
    EXPECT_EQ(upgraded.compute_count(), 1u);
    EXPECT_EQ(upgraded.cache()->get(encode_graph_id(ring(7)))->engine_version, "new");
    upgraded.sld(ring(7));
    EXPECT_EQ(upgraded.compute_count(), 1u);
}

TEST(service, without_cache_always_computes) {
    SldService service;
    EXPECT_EQ(service.cache(), nullptr);
    service.sld(ring(5));
    service.sld(ring(5));
    EXPECT_EQ(service.compute_count(), 2u);
}

TEST(service, size_policy) {
    SldService service;
    EXPECT_NO_THROW(service.sld(path(16)));
    EXPECT_THROW(service.sld(path(17)), ForceRequired);
    EXPECT_THROW(service.thresholds(ring(17)), ForceRequired);
    EXPECT_THROW(service.sld(path(29), true), CapExceeded);
    EXPECT_THROW(service.sld(path(29), false), CapExceeded);
    // Many small components are fine at any total size.
    Graph many = Graph(32);
    for (std::size_t i = 0; i + 1 < 32; i += 2) {
        many = many.with_edge_toggled(i, i + 1);
    }
    EXPECT_EQ(service.sld(many), sld_of_graph(many));
    try {
        enforce_compute_policy(path(20), false);
        FAIL();
    } catch (const ForceRequired &e) {
        EXPECT_EQ(e.size, 20u);
        EXPECT_EQ(e.limit, kSldAutoLimit);
    }
}

TEST(service, unwritable_cache_is_a_storage_error) {
    TempPath dir("service");
    std::filesystem::create_directories(dir.path() / "occupied");
    ServiceOptions options;
    options.cache_path = (dir.path() / "occupied").string();
    EXPECT_THROW(SldService{options}, StorageError);
}
