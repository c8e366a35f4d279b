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

#ifndef GSV_ERRORS_H
#define GSV_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsv {

/// An argument is outside the domain of the operation (bad vertex index, size, probability...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Attempted to create an edge from a vertex to itself.
struct LoopError : DomainError {
    using DomainError::DomainError;
};

/// Malformed text input (graph IDs, Pauli strings, JSON documents).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A computation was refused because the input exceeds a hard size cap.
/// The cap cannot be overridden by the caller.
struct CapExceeded : std::runtime_error {
    CapExceeded(const std::string &what, std::size_t size, std::size_t cap)
        : std::runtime_error(what), size(size), cap(cap) {
    }
    std::size_t size;
    std::size_t cap;
};

/// A computation above the automatic limit was requested without `force`.
struct ForceRequired : std::runtime_error {
    ForceRequired(const std::string &what, std::size_t size, std::size_t limit)
        : std::runtime_error(what), size(size), limit(limit) {
    }
    std::size_t size;
    std::size_t limit;
};

/// The cache was asked to store a record that contradicts an existing one.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Persistent storage could not be read or written. Usually transient; retrying may succeed.
struct StorageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gsv

#endif
