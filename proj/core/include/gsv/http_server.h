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

#ifndef GSV_HTTP_SERVER_H
#define GSV_HTTP_SERVER_H

#include <memory>
#include <string>
#include <thread>

#include "gsv/api.h"

namespace gsv {

/// Serves an ApiRouter over HTTP/1.1. Requests are handled on a thread pool; the
/// router and the service behind it are safe for concurrent use.
class HttpServer {
   public:
    explicit HttpServer(const ApiRouter &router);
    ~HttpServer();
    HttpServer(const HttpServer &) = delete;
    HttpServer &operator=(const HttpServer &) = delete;

    /// Binds and blocks until stop() is called. Returns false if binding failed.
    bool listen(const std::string &host, int port);
    /// Binds to an ephemeral port and serves on a background thread. Returns the port, or -1.
    int start_background(const std::string &host);
    void stop();

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::thread worker_;
};

}  // namespace gsv

#endif
