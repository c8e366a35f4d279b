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

#ifndef GSV_API_H
#define GSV_API_H

#include <map>
#include <string>

#include "gsv/service.h"

namespace gsv {

struct ApiRequest {
    std::string method;
    std::string path;
    std::map<std::string, std::string> query;
};

struct ApiResponse {
    int status = 200;
    std::string body;
};

/// Transport-independent JSON API over an SldService.
///
///   GET  /api/v1/graphs/{id}
///   GET  /api/v1/graphs/{id}/sld?noise=<p>&force=<bool>
///   GET  /api/v1/graphs/{id}/thresholds?force=<bool>
///   GET  /api/v1/graphs/{id}/stabilizers?limit=<m>
///   POST /api/v1/graphs/{id}/lc/{vertex}
///   GET  /api/v1/predefined
///   GET  /api/v1/random?n=&p=&seed=
///
/// Errors: 400 malformed input, 404 unknown route, 405 wrong method, 413 over the hard
/// cap, 422 over the automatic limit without force, 500 integrity failure, 503 storage failure.
class ApiRouter {
   public:
    explicit ApiRouter(SldService &service) : service_(service) {
    }

    ApiResponse handle(const ApiRequest &request) const;

   private:
    SldService &service_;
};

/// Largest `limit` accepted by the stabilizers endpoint.
constexpr std::size_t kMaxStabilizerListing = 4096;
constexpr std::size_t kDefaultStabilizerListing = 64;

}  // namespace gsv

#endif
