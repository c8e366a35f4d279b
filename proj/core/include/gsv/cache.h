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

#ifndef GSV_CACHE_H
#define GSV_CACHE_H

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "gsv/sld.h"

namespace gsv {

/// SLD of one connected component, keyed by the component's graph ID (vertices
/// relabeled in ascending original order).
struct CacheRecord {
    std::string key;
    Sld sld;
    std::int64_t computed_at_ms = 0;
    std::string engine_version;
};

/// Persistent SLD cache backed by an append-only log with one JSON document per line.
///
/// The log is replayed into memory on open; the last record for a key wins. A torn
/// final line (from a crash mid-append) is dropped from the file. Reads take a shared lock; appends
/// are serialized and become visible only after the line is flushed.
class SldCache {
   public:
    /// Opens (creating if needed) the log at `path`. Throws StorageError on I/O failure
    /// or a corrupt record before the final line.
    explicit SldCache(std::filesystem::path path);

    std::optional<CacheRecord> get(const std::string &key) const;

    /// Stores a record. Re-putting the same SLD is a no-op. A different SLD under the same
    /// key and engine version throws IntegrityError. A record from another engine version
    /// is superseded. Throws DomainError for invalid keys or SLDs.
    void put(const CacheRecord &record);

    std::size_t size() const;
    const std::filesystem::path &path() const {
        return path_;
    }

   private:
    void replay();
    void append_line(const std::string &line);

    std::filesystem::path path_;
    mutable std::shared_mutex mutex_;
    std::map<std::string, CacheRecord> records_;
    std::ofstream log_;
};

/// Validates a record as stored in the cache: key decodes to a connected graph with
/// matching vertex count and the SLD satisfies its invariants.
void validate_cache_record(const CacheRecord &record);

std::string cache_record_to_json_line(const CacheRecord &record);
/// Throws ParseError for malformed lines.
CacheRecord cache_record_from_json_line(const std::string &line);

}  // namespace gsv

#endif
