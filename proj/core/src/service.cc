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

#include <chrono>
#include <iostream>

#include "gsv/errors.h"
#include "gsv/graph_id.h"
#include "gsv/version.h"

namespace gsv {

namespace {

std::int64_t now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

}  // namespace

void enforce_compute_policy(const Graph &g, bool force) {
    std::size_t largest = largest_component_size(g);
    if (largest > kSldHardCap) {
        throw CapExceeded(
            "largest connected component has " + std::to_string(largest) + " vertices; the hard cap is " +
                std::to_string(kSldHardCap) + ".",
            largest, kSldHardCap);
    }
    if (largest > kSldAutoLimit && !force) {
        throw ForceRequired(
            "largest connected component has " + std::to_string(largest) + " vertices; components above " +
                std::to_string(kSldAutoLimit) + " need force=true.",
            largest, kSldAutoLimit);
    }
}

SldService::SldService(ServiceOptions options) : options_(std::move(options)) {
    if (options_.engine_version.empty()) {
        options_.engine_version = kEngineVersion;
    }
    if (!options_.cache_path.empty()) {
        cache_ = std::make_unique<SldCache>(options_.cache_path);
    }
}

Sld SldService::component_sld(const Graph &component) {
    if (!cache_) {
        computed_++;
        return sld_bruteforce(component, options_.kernel);
    }
    std::string key = encode_graph_id(component);
    auto hit = cache_->get(key);
    if (hit && hit->engine_version == options_.engine_version) {
        return hit->sld;
    }
    computed_++;
    Sld fresh = sld_bruteforce(component, options_.kernel);
    if (hit && !(hit->sld == fresh)) {
        std::cerr << "gsv: cached SLD for " << key << " from engine '" << hit->engine_version
                  << "' disagrees with a recomputation; replacing it.\n";
    }
    cache_->put(CacheRecord{key, fresh, now_ms(), options_.engine_version});
    return fresh;
}

Sld SldService::sld(const Graph &g, bool force) {
    enforce_compute_policy(g, force);
    Sld out;
    for (const auto &c : connected_components(g)) {
        out = sld_combine(out, component_sld(c.graph));
    }
    return out;
}

ThresholdReport SldService::thresholds(const Graph &g, bool force) {
    return threshold_report(g, sld(g, force));
}

}  // namespace gsv
