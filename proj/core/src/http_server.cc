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

#include "gsv/http_server.h"

#include <httplib.h>

namespace gsv {

struct HttpServer::Impl {
    httplib::Server server;
};

HttpServer::HttpServer(const ApiRouter &router) : impl_(std::make_unique<Impl>()) {
    auto handler = [&router](const httplib::Request &req, httplib::Response &res) {
        ApiRequest api;
        api.method = req.method;
        api.path = req.path;
        for (const auto &[key, value] : req.params) {
            api.query.emplace(key, value);
        }
        ApiResponse out = router.handle(api);
        res.status = out.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(out.body, "application/json; charset=utf-8");
    };
    impl_->server.Get(R"(/.*)", handler);
    impl_->server.Post(R"(/.*)", handler);
}

HttpServer::~HttpServer() {
    stop();
}

bool HttpServer::listen(const std::string &host, int port) {
    return impl_->server.listen(host, port);
}

int HttpServer::start_background(const std::string &host) {
    int port = impl_->server.bind_to_any_port(host);
    if (port < 0) {
        return -1;
    }
    worker_ = std::thread([this] {
        impl_->server.listen_after_bind();
    });
    impl_->server.wait_until_ready();
    return port;
}

void HttpServer::stop() {
    impl_->server.stop();
    if (worker_.joinable()) {
        worker_.join();
    }
}

}  // namespace gsv
