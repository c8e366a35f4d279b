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

#ifndef GSV_SERVICE_H
#define GSV_SERVICE_H

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>

#include "gsv/cache.h"
#include "gsv/graph.h"
#include "gsv/sld.h"
#include "gsv/thresholds.h"

namespace gsv {

struct ServiceOptions {
    KernelOptions kernel;
    /// Cache log location; empty disables persistence.
    std::string cache_path;
    std::string engine_version;
};

/// Computes graph SLDs component by component, consulting the shared cache first.
///
/// Components larger than kSldAutoLimit need `force`; components larger than
/// kSldHardCap are always refused. Safe for concurrent use.
class SldService {
   public:
    explicit SldService(ServiceOptions options = {});

    /// Throws ForceRequired, CapExceeded, StorageError or IntegrityError.
    Sld sld(const Graph &g, bool force = false);
    ThresholdReport thresholds(const Graph &g, bool force = false);

    /// Number of component SLDs computed by the kernel (cache misses plus re-verifications).
    std::uint64_t compute_count() const {
        return computed_.load();
    }
    const SldCache *cache() const {
        return cache_.get();
    }
    const std::string &engine_version() const {
        return options_.engine_version;
    }

   private:
    Sld component_sld(const Graph &component);

    ServiceOptions options_;
    std::unique_ptr<SldCache> cache_;
    std::atomic<std::uint64_t> computed_{0};
};

/// Throws ForceRequired / CapExceeded according to the component-size policy.
void enforce_compute_policy(const Graph &g, bool force);

}  // namespace gsv

#endif
