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

#include "gsv/api.h"

#include <charconv>
#include <cmath>
#include <json.hpp>
#include <vector>

#include "gsv/errors.h"
#include "gsv/generators.h"
#include "gsv/graph_id.h"
#include "gsv/serialize.h"

namespace gsv {

namespace {

struct HttpError {
    int status;
    std::string message;
};

ApiResponse ok(std::string body) {
    return {200, std::move(body)};
}

std::string percent_decode(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t k = 0; k < text.size(); k++) {
        if (text[k] == '%' && k + 2 < text.size()) {
            int value = 0;
            auto [end, ec] = std::from_chars(text.data() + k + 1, text.data() + k + 3, value, 16);
            if (ec == std::errc{} && end == text.data() + k + 3) {
                out.push_back(static_cast<char>(value));
                k += 2;
                continue;
            }
        }
        out.push_back(text[k]);
    }
    return out;
}

std::vector<std::string> split_path(std::string_view path) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= path.size()) {
        std::size_t end = path.find('/', start);
        if (end == std::string_view::npos) {
            end = path.size();
        }
        if (end > start) {
            parts.push_back(percent_decode(path.substr(start, end - start)));
        }
        start = end + 1;
    }
    return parts;
}

const std::string *find_param(const ApiRequest &req, const std::string &name) {
    auto it = req.query.find(name);
    return it == req.query.end() ? nullptr : &it->second;
}

bool parse_bool_param(const ApiRequest &req, const std::string &name) {
    const std::string *v = find_param(req, name);
    if (!v || v->empty() || *v == "false" || *v == "0") {
        return false;
    }
    if (*v == "true" || *v == "1") {
        return true;
    }
    throw HttpError{400, "query parameter '" + name + "' must be true or false."};
}

double parse_double(const std::string &name, const std::string &text) {
    double value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
        throw HttpError{400, "query parameter '" + name + "' must be a number."};
    }
    return value;
}

std::uint64_t parse_uint(const std::string &name, const std::string &text) {
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw HttpError{400, "query parameter '" + name + "' must be a nonnegative integer."};
    }
    return value;
}

const std::string &required_param(const ApiRequest &req, const std::string &name) {
    const std::string *v = find_param(req, name);
    if (!v) {
        throw HttpError{400, "missing query parameter '" + name + "'."};
    }
    return *v;
}

void require_method(const ApiRequest &req, const char *method) {
    if (req.method != method) {
        throw HttpError{405, "use " + std::string(method) + " for this route."};
    }
}

ApiResponse handle_graph_route(SldService &service, const ApiRequest &req, const std::vector<std::string> &parts) {
    // parts: api v1 graphs {id} [...]
    Graph g = decode_graph_id(parts[3]);
    if (parts.size() == 4) {
        require_method(req, "GET");
        return ok(graph_document_json(g));
    }
    const std::string &action = parts[4];
    if (action == "sld" && parts.size() == 5) {
        require_method(req, "GET");
        bool force = parse_bool_param(req, "force");
        std::optional<double> noise;
        if (const std::string *v = find_param(req, "noise")) {
            noise = parse_double("noise", *v);
            if (*noise < 0 || *noise > 1) {
                throw HttpError{400, "noise must be in [0, 1]."};
            }
        }
        Sld sld = service.sld(g, force);
        std::optional<DecayedSld> decayed;
        if (noise) {
            decayed = decay(sld, *noise);
        }
        return ok(sld_json(sld, sld_type(g), decayed));
    }
    if (action == "thresholds" && parts.size() == 5) {
        require_method(req, "GET");
        return ok(thresholds_json(service.thresholds(g, parse_bool_param(req, "force"))));
    }
    if (action == "stabilizers" && parts.size() == 5) {
        require_method(req, "GET");
        std::size_t limit = kDefaultStabilizerListing;
        if (const std::string *v = find_param(req, "limit")) {
            limit = parse_uint("limit", *v);
            if (limit > kMaxStabilizerListing) {
                throw HttpError{400, "limit must be at most " + std::to_string(kMaxStabilizerListing) + "."};
            }
        }
        return ok(stabilizers_json(g, limit));
    }
    if (action == "lc" && parts.size() == 6) {
        require_method(req, "POST");
        std::uint64_t vertex = 0;
        const std::string &text = parts[5];
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), vertex);
        if (ec != std::errc{} || end != text.data() + text.size() || vertex < 1 || vertex > g.num_vertices()) {
            throw HttpError{400, "vertex must be an integer in [1, " + std::to_string(g.num_vertices()) + "]."};
        }
        nlohmann::json j;
        j["id"] = encode_graph_id(g.local_complement(vertex - 1));
        return ok(j.dump());
    }
    throw HttpError{404, "unknown route."};
}

ApiResponse dispatch(SldService &service, const ApiRequest &req) {
    auto parts = split_path(req.path);
    if (parts.size() < 3 || parts[0] != "api" || parts[1] != "v1") {
        throw HttpError{404, "unknown route."};
    }
    if (parts[2] == "graphs" && parts.size() >= 4) {
        return handle_graph_route(service, req, parts);
    }
    if (parts[2] == "predefined" && parts.size() == 3) {
        require_method(req, "GET");
        nlohmann::json kinds = nlohmann::json::array();
        for (auto k : all_kinds()) {
            kinds.push_back(kind_name(k));
        }
        nlohmann::json j;
        j["kinds"] = kinds;
        return ok(j.dump());
    }
    if (parts[2] == "random" && parts.size() == 3) {
        require_method(req, "GET");
        auto n = parse_uint("n", required_param(req, "n"));
        double p = parse_double("p", required_param(req, "p"));
        auto seed = parse_uint("seed", required_param(req, "seed"));
        nlohmann::json j;
        j["id"] = encode_graph_id(random_graph(n, p, seed));
        return ok(j.dump());
    }
    throw HttpError{404, "unknown route."};
}

}  // namespace

ApiResponse ApiRouter::handle(const ApiRequest &request) const {
    auto fail = [](int status, const std::string &message) {
        return ApiResponse{status, error_json(status, message)};
    };
    try {
        return dispatch(service_, request);
    } catch (const HttpError &e) {
        return fail(e.status, e.message);
    } catch (const ParseError &e) {
        return fail(400, e.what());
    } catch (const DomainError &e) {
        return fail(400, e.what());
    } catch (const ForceRequired &e) {
        return fail(422, e.what());
    } catch (const CapExceeded &e) {
        return fail(413, e.what());
    } catch (const IntegrityError &e) {
        return fail(500, e.what());
    } catch (const StorageError &e) {
        return fail(503, e.what());
    }
}

}  // namespace gsv
