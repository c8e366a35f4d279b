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

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "gsv/api.h"
#include "gsv/errors.h"
#include "gsv/generators.h"
#include "gsv/graph_id.h"
#include "gsv/http_server.h"
#include "gsv/serialize.h"
#include "gsv/service.h"
#include "gsv/stabilizer.h"

namespace gsv {

namespace {

constexpr std::size_t kBarWidth = 40;

struct Settings {
    std::string format = "json";
    std::string cache_path;
    unsigned threads = 1;
};

std::string resolve_cache_path(const std::string &flag) {
    if (!flag.empty()) {
        return flag;
    }
    if (const char *env = std::getenv("GSV_CACHE_PATH")) {
        return env;
    }
    return {};
}

SldService make_service(const Settings &s) {
    ServiceOptions options;
    options.kernel.threads = s.threads;
    options.cache_path = resolve_cache_path(s.cache_path);
    return SldService(options);
}

std::string bar(double value, double max_value) {
    if (max_value <= 0 || value <= 0) {
        return "";
    }
    auto len = static_cast<std::size_t>(value / max_value * kBarWidth + 0.5);
    return std::string(std::max<std::size_t>(len, 1), '#');
}

void print_sld_table(std::ostream &out, const Sld &sld, const std::optional<DecayedSld> &decayed) {
    std::vector<double> values;
    for (std::size_t k = 0; k < sld.counts.size(); k++) {
        values.push_back(decayed ? decayed->values[k] : static_cast<double>(sld.counts[k]));
    }
    double max_value = *std::max_element(values.begin(), values.end());
    out << std::setw(3) << "k" << " | " << std::setw(12) << "A_k" << " | bar\n";
    for (std::size_t k = 0; k < values.size(); k++) {
        out << std::setw(3) << k << " | " << std::setw(12);
        if (decayed) {
            out << std::setprecision(6) << values[k];
        } else {
            out << sld.counts[k];
        }
        out << " | " << bar(values[k], max_value) << "\n";
    }
}

void print_adjacency(std::ostream &out, const Graph &g) {
    for (std::size_t i = 0; i < g.num_vertices(); i++) {
        for (std::size_t j = 0; j < g.num_vertices(); j++) {
            out << (j ? " " : "") << (g.has_edge(i, j) ? '1' : '0');
        }
        out << "\n";
    }
}

/// Parses "i-j" with 1-based labels.
std::pair<std::size_t, std::size_t> parse_edge(const std::string &text) {
    auto dash = text.find('-');
    if (dash == std::string::npos) {
        throw ParseError("edges are written i-j, got '" + text + "'.");
    }
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        auto a = std::stoul(text.substr(0, dash), &used_a);
        auto b = std::stoul(text.substr(dash + 1), &used_b);
        if (used_a != dash || used_b != text.size() - dash - 1 || a < 1 || b < 1) {
            throw ParseError("");
        }
        return {a - 1, b - 1};
    } catch (const std::exception &) {
        throw ParseError("edges are written i-j with 1-based labels, got '" + text + "'.");
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Graph state analysis: sector length distributions, thresholds and stabilizers."};
    app.name("gsv");
    app.require_subcommand(1);

    Settings settings;
    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    };
    auto add_compute = [&](CLI::App *cmd) {
        cmd->add_option("--cache-path", settings.cache_path, "SLD cache log (default: $GSV_CACHE_PATH)");
        cmd->add_option("--threads", settings.threads, "Kernel worker threads")->check(CLI::Range(1u, 256u));
    };

    std::string id;
    bool force = false;
    std::optional<double> noise;

    auto *sld_cmd = app.add_subcommand("sld", "Sector length distribution of a graph state");
    sld_cmd->add_option("id", id, "Graph ID")->required();
    sld_cmd->add_option("--noise", noise, "Depolarizing probability applied to every qubit")
        ->check(CLI::Range(0.0, 1.0));
    sld_cmd->add_flag("--force", force, "Allow components above the automatic size limit");
    add_format(sld_cmd);
    add_compute(sld_cmd);

    auto *thr_cmd = app.add_subcommand("thresholds", "Lower bounds on the entanglement-loss noise level");
    thr_cmd->add_option("id", id, "Graph ID")->required();
    thr_cmd->add_flag("--force", force, "Allow components above the automatic size limit");
    add_format(thr_cmd);
    add_compute(thr_cmd);

    std::size_t limit = kDefaultStabilizerListing;
    auto *stab_cmd = app.add_subcommand("stabilizers", "List stabilizers in ascending index order");
    stab_cmd->add_option("id", id, "Graph ID")->required();
    stab_cmd->add_option("--limit", limit, "Number of stabilizers to print");
    add_format(stab_cmd);

    std::size_t vertex = 0;
    auto *lc_cmd = app.add_subcommand("lc", "Local complementation at a vertex (1-based)");
    lc_cmd->add_option("id", id, "Graph ID")->required();
    lc_cmd->add_option("vertex", vertex, "Vertex")->required();

    auto *info_cmd = app.add_subcommand("info", "Graph, properties, parity coloring and distillation pair");
    info_cmd->add_option("id", id, "Graph ID")->required();

    auto *id_cmd = app.add_subcommand("id", "Graph ID codec");
    id_cmd->require_subcommand(1);
    std::vector<std::string> encode_args;
    std::string encode_json;
    std::string encode_kind;
    std::size_t encode_n = 0;
    auto *encode_cmd = id_cmd->add_subcommand("encode", "Build a graph ID: <n> [i-j ...], --json, or --kind/--n");
    encode_cmd->add_option("graph", encode_args, "Vertex count followed by 1-based edges i-j");
    encode_cmd->add_option("--json", encode_json, "Graph JSON {\"n\":..,\"edges\":[[i,j],..]}");
    encode_cmd->add_option("--kind", encode_kind, "Predefined graph kind")
        ->check(CLI::IsMember({"edgeless", "complete", "ring", "path", "star"}));
    encode_cmd->add_option("--n", encode_n, "Vertex count for --kind");
    auto *decode_cmd = id_cmd->add_subcommand("decode", "Decode a graph ID into its edge list");
    decode_cmd->add_option("id", id, "Graph ID")->required();
    add_format(decode_cmd);

    std::size_t random_n = 0;
    double random_p = 0;
    std::uint64_t random_seed = 0;
    auto *random_cmd = app.add_subcommand("random", "Seeded random graph");
    random_cmd->add_option("--n", random_n, "Vertex count")->required();
    random_cmd->add_option("--p", random_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    random_cmd->add_option("--seed", random_seed, "Generator seed")->required();

    std::string host = "127.0.0.1";
    int port = 8080;
    auto *serve_cmd = app.add_subcommand("serve", "Run the JSON HTTP service");
    serve_cmd->add_option("--host", host, "Bind address");
    serve_cmd->add_option("--port", port, "Port")->check(CLI::Range(0, 65535));
    add_compute(serve_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    bool table = settings.format == "table";
    try {
        if (*sld_cmd) {
            Graph g = decode_graph_id(id);
            auto service = make_service(settings);
            Sld sld = service.sld(g, force);
            std::optional<DecayedSld> decayed;
            if (noise) {
                decayed = decay(sld, *noise);
            }
            if (table) {
                print_sld_table(out, sld, decayed);
            } else {
                out << sld_json(sld, sld_type(g), decayed) << "\n";
            }
        } else if (*thr_cmd) {
            Graph g = decode_graph_id(id);
            auto service = make_service(settings);
            auto report = service.thresholds(g, force);
            if (table) {
                out << std::setprecision(10);
                out << "n-sector      " << report.n_sector << "\n";
                out << "majorization  " << report.majorization << "\n";
                out << "distillation  " << report.distillation << "\n";
            } else {
                out << thresholds_json(report) << "\n";
            }
        } else if (*stab_cmd) {
            Graph g = decode_graph_id(id);
            if (table) {
                auto range = enumerate_stabilizers(g);
                std::size_t shown = 0;
                for (auto it = range.begin(); it != range.end() && shown < limit; ++it, ++shown) {
                    auto e = *it;
                    out << BitVector{g.num_vertices(), e.index}.str() << "  " << std::setw(static_cast<int>(g.num_vertices()) + 1)
                        << render_pauli(e.pauli) << "  " << e.pauli.weight() << "\n";
                }
            } else {
                out << stabilizers_json(g, limit) << "\n";
            }
        } else if (*lc_cmd) {
            Graph g = decode_graph_id(id);
            if (vertex < 1 || vertex > g.num_vertices()) {
                throw DomainError("vertex must be in [1, " + std::to_string(g.num_vertices()) + "].");
            }
            out << encode_graph_id(g.local_complement(vertex - 1)) << "\n";
        } else if (*info_cmd) {
            out << graph_document_json(decode_graph_id(id)) << "\n";
        } else if (*encode_cmd) {
            int sources = !encode_json.empty() + !encode_kind.empty() + !encode_args.empty();
            if (sources != 1) {
                throw ParseError("id encode takes exactly one of: <n> [edges], --json, --kind.");
            }
            Graph g(1);
            if (!encode_json.empty()) {
                g = graph_from_json(encode_json);
            } else if (!encode_kind.empty()) {
                g = generate(parse_kind(encode_kind), encode_n);
            } else {
                std::size_t n = 0;
                try {
                    n = std::stoul(encode_args[0]);
                } catch (const std::exception &) {
                    throw ParseError("first argument must be the vertex count.");
                }
                std::vector<std::pair<std::size_t, std::size_t>> edges;
                for (std::size_t k = 1; k < encode_args.size(); k++) {
                    edges.push_back(parse_edge(encode_args[k]));
                }
                g = Graph::from_edges(n, edges);
            }
            out << encode_graph_id(g) << "\n";
        } else if (*decode_cmd) {
            Graph g = decode_graph_id(id);
            if (table) {
                print_adjacency(out, g);
            } else {
                out << graph_json(g) << "\n";
            }
        } else if (*random_cmd) {
            out << encode_graph_id(random_graph(random_n, random_p, random_seed)) << "\n";
        } else if (*serve_cmd) {
            auto service = make_service(settings);
            ApiRouter router(service);
            HttpServer server(router);
            err << "gsv: serving on http://" << host << ":" << port;
            if (service.cache()) {
                err << " (cache: " << service.cache()->path().string() << ", " << service.cache()->size()
                    << " records)";
            }
            err << std::endl;
            if (!server.listen(host, port)) {
                err << "gsv: cannot bind " << host << ":" << port << "\n";
                return kExitRefused;
            }
        }
    } catch (const ParseError &e) {
        err << "gsv: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "gsv: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ForceRequired &e) {
        err << "gsv: " << e.what() << " Pass --force to compute anyway.\n";
        return kExitRefused;
    } catch (const CapExceeded &e) {
        err << "gsv: " << e.what() << "\n";
        return kExitRefused;
    } catch (const std::runtime_error &e) {
        err << "gsv: " << e.what() << "\n";
        return kExitRefused;
    }
    return kExitOk;
}

}  // namespace gsv
