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

#include "gsv/cache.h"

#include <json.hpp>

#include "gsv/errors.h"
#include "gsv/graph_id.h"

namespace gsv {

namespace {

using nlohmann::json;

}  // namespace

std::string cache_record_to_json_line(const CacheRecord &record) {
    json j;
    j["key"] = record.key;
    j["A"] = record.sld.counts;
    j["computedAtMs"] = record.computed_at_ms;
    j["engineVersion"] = record.engine_version;
    return j.dump();
}

CacheRecord cache_record_from_json_line(const std::string &line) {
    try {
        json j = json::parse(line);
        CacheRecord r;
        r.key = j.at("key").get<std::string>();
        r.sld.counts = j.at("A").get<std::vector<std::uint64_t>>();
        r.computed_at_ms = j.at("computedAtMs").get<std::int64_t>();
        r.engine_version = j.at("engineVersion").get<std::string>();
        return r;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed cache record: ") + e.what());
    }
}

void validate_cache_record(const CacheRecord &record) {
    Graph g = [&] {
        try {
            return decode_graph_id(record.key);
        } catch (const ParseError &e) {
            throw DomainError(std::string("cache key is not a graph ID: ") + e.what());
        }
    }();
    if (connected_components(g).size() != 1) {
        throw DomainError("cache key '" + record.key + "' is not a connected graph.");
    }
    if (record.sld.num_qubits() != g.num_vertices()) {
        throw DomainError("cache record SLD length does not match its key.");
    }
    try {
        check_sld_invariants(record.sld);
    } catch (const std::logic_error &e) {
        throw DomainError(std::string("cache record SLD is invalid: ") + e.what());
    }
}

SldCache::SldCache(std::filesystem::path path) : path_(std::move(path)) {
    std::error_code ec;
    if (path_.has_parent_path()) {
        std::filesystem::create_directories(path_.parent_path(), ec);
    }
    replay();
    log_.open(path_, std::ios::app | std::ios::binary);
    if (!log_) {
        throw StorageError("cannot open cache log '" + path_.string() + "' for appending; retry after fixing access.");
    }
}

void SldCache::replay() {
    std::error_code ec;
    if (std::filesystem::is_directory(path_, ec)) {
        throw StorageError("cache log '" + path_.string() + "' is a directory.");
    }
    std::ifstream in(path_, std::ios::binary);
    if (!in) {
        return;
    }
    std::string content;
    try {
        content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } catch (const std::ios_base::failure &) {
        in.setstate(std::ios::badbit);
    }
    if (in.bad()) {
        throw StorageError("failed reading cache log '" + path_.string() + "'; retry.");
    }
    in.close();
    bool torn_tail = !content.empty() && content.back() != '\n';
    bool drop_tail = false;

    std::size_t line_no = 0;
    std::size_t start = 0;
    std::size_t tail_start = 0;
    while (start < content.size()) {
        std::size_t end = content.find('\n', start);
        bool last = end == std::string::npos;
        std::string line = content.substr(start, last ? std::string::npos : end - start);
        tail_start = start;
        start = last ? content.size() : end + 1;
        line_no++;
        if (line.empty()) {
            continue;
        }
        try {
            CacheRecord r = cache_record_from_json_line(line);
            validate_cache_record(r);
            auto it = records_.find(r.key);
            if (it != records_.end() && it->second.engine_version == r.engine_version && !(it->second.sld == r.sld)) {
                throw StorageError("cache log has conflicting records for key '" + r.key + "'.");
            }
            records_[r.key] = std::move(r);
        } catch (const std::invalid_argument &e) {
            if (last && torn_tail) {
                drop_tail = true;
                break;
            }
            throw StorageError(
                "corrupt cache record at " + path_.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (drop_tail) {
        // A crash mid-append left a partial record; cut it so later appends stay line-aligned.
        std::filesystem::resize_file(path_, tail_start, ec);
        if (ec) {
            throw StorageError("cannot truncate torn record in '" + path_.string() + "': " + ec.message());
        }
    } else if (torn_tail) {
        std::ofstream fix(path_, std::ios::app | std::ios::binary);
        fix << '\n';
        if (!fix) {
            throw StorageError("cannot repair cache log '" + path_.string() + "'; retry.");
        }
    }
}

std::optional<CacheRecord> SldCache::get(const std::string &key) const {
    std::shared_lock lock(mutex_);
    auto it = records_.find(key);
    if (it == records_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void SldCache::put(const CacheRecord &record) {
    validate_cache_record(record);
    std::unique_lock lock(mutex_);
    auto it = records_.find(record.key);
    if (it != records_.end()) {
        bool same_version = it->second.engine_version == record.engine_version;
        if (same_version && it->second.sld == record.sld) {
            return;
        }
        if (same_version) {
            throw IntegrityError(
                "refusing to overwrite cached SLD for '" + record.key + "' with a different value.");
        }
    }
    append_line(cache_record_to_json_line(record));
    records_[record.key] = record;
}

void SldCache::append_line(const std::string &line) {
    log_ << line << '\n';
    log_.flush();
    if (!log_) {
        log_.clear();
        throw StorageError("failed to append to cache log '" + path_.string() + "'; retry the request.");
    }
}

std::size_t SldCache::size() const {
    std::shared_lock lock(mutex_);
    return records_.size();
}

}  // namespace gsv
