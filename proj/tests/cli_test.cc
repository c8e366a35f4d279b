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

#include <gtest/gtest.h>
#include <json.hpp>
#include <sstream>

#include "gsv/generators.h"
#include "gsv/graph_id.h"
#include "temp_path.h"

using namespace gsv;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, sld_json_and_table) {
    auto r = run({"sld", "6:8c4a"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(json::parse(r.out)["A"], json::parse("[1,0,0,8,21,24,10]"));

    auto t = run({"sld", "3:4", "--format", "table"});
    EXPECT_EQ(t.code, kExitOk);
    EXPECT_NE(t.out.find("A_k"), std::string::npos);
    EXPECT_EQ(std::count(t.out.begin(), t.out.end(), '\n'), 5);

    auto noisy = run({"sld", "3:4", "--noise", "1"});
    EXPECT_EQ(json::parse(noisy.out)["values"], json::parse("[1.0,0.0,0.0,0.0]"));
    EXPECT_EQ(run({"sld", "3:4", "--noise", "1.5"}).code, kExitUsage);
}

TEST(cli, exit_codes) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"sld", "3:G"}).code, kExitUsage);
    EXPECT_EQ(run({"sld", "3:4", "--format", "xml"}).code, kExitUsage);
    std::string id17 = encode_graph_id(path(17));
    auto refused = run({"sld", id17});
    EXPECT_EQ(refused.code, kExitRefused);
    EXPECT_NE(refused.err.find("--force"), std::string::npos);
    EXPECT_EQ(run({"sld", id17, "--force"}).code, kExitOk);
    EXPECT_EQ(run({"sld", encode_graph_id(path(29)), "--force"}).code, kExitRefused);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(cli, thresholds) {
    auto r = run({"thresholds", "6:8c4a"});
    ASSERT_EQ(r.code, kExitOk);
    auto j = json::parse(r.out);
    EXPECT_NEAR(j["majorization"].get<double>(), 0.2995481328892329, 1e-9);
    auto t = run({"thresholds", "6:8c4a", "--format", "table"});
    EXPECT_NE(t.out.find("distillation  0.206299474"), std::string::npos) << t.out;
}

TEST(cli, stabilizers) {
    auto t = run({"stabilizers", "3:a", "--format", "table"});
    ASSERT_EQ(t.code, kExitOk);
    EXPECT_NE(t.out.find("111  -YXY  3"), std::string::npos) << t.out;
    auto j = json::parse(run({"stabilizers", "3:a", "--limit", "2"}).out);
    EXPECT_EQ(j["stabilizers"].size(), 2u);
}

TEST(cli, id_codec_lc_and_random) {
    EXPECT_EQ(run({"id", "encode", "6", "1-2", "2-3", "3-4", "4-5", "5-6", "1-6"}).out, "6:8c4a\n");
    EXPECT_EQ(run({"id", "encode", "--kind", "ring", "--n", "6"}).out, "6:8c4a\n");
    EXPECT_EQ(run({"id", "encode", "--json", R"({"n":3,"edges":[[1,3]]})"}).out, "3:4\n");
    EXPECT_EQ(run({"id", "encode", "3", "1-4"}).code, kExitUsage);
    EXPECT_EQ(run({"id", "encode", "3", "1+2"}).code, kExitUsage);
    EXPECT_EQ(run({"id", "encode"}).code, kExitUsage);

    EXPECT_EQ(json::parse(run({"id", "decode", "3:4"}).out), json::parse(R"({"n":3,"edges":[[1,3]]})"));
    EXPECT_EQ(run({"id", "decode", "3:4", "--format", "table"}).out, "0 0 1\n0 0 0\n1 0 0\n");

    EXPECT_EQ(run({"lc", "3:a", "2"}).out, encode_graph_id(complete(3)) + "\n");
    EXPECT_EQ(run({"lc", "3:a", "4"}).code, kExitUsage);
    EXPECT_EQ(run({"random", "--n", "8", "--p", "0.5", "--seed", "1"}).out, "8:fb27bbf\n");
    EXPECT_EQ(json::parse(run({"info", "6:8c4a"}).out)["id"], "6:8c4a");
}

TEST(cli, cache_path_flag_persists_results) {
    gsv::testing::TempPath dir("cli");
    std::string file = (dir.path() / "sld.jsonl").string();
    EXPECT_EQ(run({"sld", "6:8c4a", "--cache-path", file}).code, kExitOk);
    EXPECT_TRUE(std::filesystem::exists(file));
    EXPECT_GT(std::filesystem::file_size(file), 0u);
}
