/*
 * Copyright 2026 commutator-kit contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "ckit/cli.hpp"
#include "ckit/congruence.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace ckit;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

std::string data(const std::string& name) { return std::string(CKIT_TEST_DATA) + "/" + name; }

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "commutator-kit");
    std::ostringstream out, err;
    const int code = cli::run_main(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute") {
    auto r = run({"compute", "--algebra", data("z4.json"), "--alpha", "0 1 2 3", "--beta", "0 1 2 3"});
    CHECK(r.code == 0);
    CHECK(r.out == "0|1|2|3\n");
    CHECK(r.err.empty());

    r = run({"compute", "--algebra", data("s3.json"), "--alpha", "0 1 2 3 4 5", "--beta",
             "0 1 2 3 4 5"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 3 4|1 2 5\n");

    r = run({"compute", "--algebra", data("semilattice2.json"), "--alpha", "0 1", "--beta", "0 1",
             "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 1\noracle: 0 1\nAGREE\n");

    // oracle skipped beyond the enumeration cap
    r = run({"compute", "--algebra", data("s3.json"), "--alpha", "0 1 2 3 4 5", "--beta",
             "0 1 2 3 4 5", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 3 4|1 2 5\n");
    CHECK(r.err.find("oracle skipped") != std::string::npos);
}

TEST_CASE("compute rejects non-congruences") {
    const auto r = run({"compute", "--algebra", data("z4.json"), "--alpha", "0 1|2 3", "--beta",
                        "0 1 2 3"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("not a congruence") != std::string::npos);
}

TEST_CASE("generate closes the specs first") {
    const auto r = run({"compute", "--algebra", data("z4.json"), "--alpha", "0 1", "--beta", "0 2",
                        "--generate", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["alpha"] == "0 1 2 3");
    CHECK(doc["beta"] == "0 2|1 3");
    CHECK(doc["text"] == "0|1|2|3");
}

TEST_CASE("check") {
    auto r = run({"check", "--algebra", data("semilattice2.json"), "--alpha", "0 1", "--beta", "0 1",
                  "--gamma", ""});
    CHECK(r.code == 0);
    CHECK(r.out == "C(alpha,beta;gamma): false\n");

    r = run({"check", "--algebra", data("z2.json"), "--alpha", "0 1", "--beta", "0 1", "--gamma",
             "0|1", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["holds"] == true);

    r = run({"check", "--algebra", data("z2.json"), "--alpha", "0 1", "--beta", "0 1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--gamma") != std::string::npos);
}

TEST_CASE("con and table") {
    auto r = run({"con", "--algebra", data("z4.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "c0 = 0|1|2|3\nc1 = 0 2|1 3\nc2 = 0 1 2 3\n");

    r = run({"table", "--algebra", data("s3.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("[c2,c2] = 0 3 4|1 2 5\n") != std::string::npos);
    const auto serial_text = r.out;
    r = run({"table", "--algebra", data("s3.json"), "--parallel"});
    CHECK(r.out == serial_text);

    r = run({"table", "--algebra", data("n5.json"), "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    const auto k = doc["congruences"].size();
    CHECK(doc["table"].size() == k);
    const auto again = run({"table", "--algebra", data("n5.json"), "--format", "json", "--parallel"});
    CHECK(again.out == r.out);
}

TEST_CASE("witness") {
    auto r = run({"witness", "--algebra", data("s3.json"), "--alpha", "0 1 2 3 4 5", "--beta",
                  "0 1 2 3 4 5", "0", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("replay: ok") != std::string::npos);

    r = run({"witness", "--format", "json", "--algebra", data("s3.json"), "--alpha", "0 1 2 3 4 5",
             "--beta", "0 1 2 3 4 5", "4", "0"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["replay"] == true);
    CHECK(doc["target"] == nlohmann::json::array({4, 0}));
    const auto chain = witness_from_json(doc["chain"].dump());
    const auto& universe = doc["universe"];
    CHECK(universe[chain.endpoints.second] == nlohmann::json::array({4, 0}));
    const auto start = universe[chain.endpoints.first];
    CHECK(start[0] == start[1]);

    // (0,1) is not in [1,1] = A_3 cosets
    r = run({"witness", "--algebra", data("s3.json"), "--alpha", "0 1 2 3 4 5", "--beta",
             "0 1 2 3 4 5", "0", "1"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("usage and parse errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"compute"}).code == 1);
    CHECK(run({"frobnicate", "--algebra", data("z4.json")}).code == 1);
    CHECK(run({"con", "--algebra", data("z4.json"), "--format", "yaml"}).code == 1);
    CHECK(run({"con", "--algebra", data("does_not_exist.json")}).code == 1);
    auto r = run({"con", "--algebra", data("bad_size.json")});
    CHECK(r.code == 1);
    CHECK(r.err.find("universe must be nonempty") != std::string::npos);
    r = run({"con", "--algebra", data("malformed.json")});
    CHECK(r.code == 1);
    CHECK(r.err.find("line") != std::string::npos);
    CHECK(run({"compute", "--algebra", data("z4.json"), "--alpha", "0 9", "--beta", "0 1 2 3"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json mode emits one document per command") {
    const std::vector<std::vector<std::string>> commands{
        {"compute", "--alpha", "0 1 2 3", "--beta", "0 2|1 3", "--oracle"},
        {"table"},
        {"con"},
        {"witness", "--alpha", "0 2|1 3", "--beta", "0 1 2 3", "0", "0"},
        {"check", "--alpha", "0 2|1 3", "--beta", "0 1 2 3", "--gamma", ""},
    };
    for (auto args : commands) {
        args.insert(args.end(), {"--algebra", data("z4.json"), "--format", "json"});
        const auto r = run(args);
        CHECK(r.code == 0);
        CHECK(nlohmann::json::accept(r.out));
    }
}

TEST_CASE("text and json encode the same result") {
    const auto text = run({"compute", "--algebra", data("n5.json"), "--alpha", "0 1 2|3 4",
                           "--beta", "0 3|1 4|2"});
    // alpha, beta may or may not be congruences of N5; whichever way, both modes agree
    const auto json = run({"compute", "--algebra", data("n5.json"), "--alpha", "0 1 2|3 4",
                           "--beta", "0 3|1 4|2", "--format", "json"});
    CHECK(text.code == json.code);
    if (text.code == 0) CHECK(text.out == nlohmann::json::parse(json.out)["text"].get<std::string>() + "\n");

    const auto con = run({"con", "--algebra", data("n5.json")});
    const auto con_json = nlohmann::json::parse(run({"con", "--algebra", data("n5.json"), "--format", "json"}).out);
    std::size_t lines = 0;
    for (char c : con.out) lines += c == '\n';
    CHECK(lines == con_json["congruences"].size());
}

TEST_CASE("the installed binary honours exit codes and streams") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto out_file = dir / "ckit_cli_out.txt";
    const auto err_file = dir / "ckit_cli_err.txt";
    auto sh = [&](const std::string& args, const std::string& env = "") {
        const std::string cmd = env + " \"" + std::string(CKIT_CLI_PATH) + "\" " + args + " >\"" +
                                out_file.string() + "\" 2>\"" + err_file.string() + "\"";
        const int status = std::system(cmd.c_str());
        std::ifstream o(out_file), e(err_file);
        std::stringstream so, se;
        so << o.rdbuf();
        se << e.rdbuf();
        return Outcome{WEXITSTATUS(status), so.str(), se.str()};
    };
    auto r = sh("compute --algebra " + data("z4.json") + " --alpha '0 1 2 3' --beta '0 1 2 3'");
    CHECK(r.code == 0);
    CHECK(r.out == "0|1|2|3\n");
    r = sh("compute --algebra " + data("z4.json") + " --alpha '0 1|2 3' --beta '0 1 2 3'");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("not a congruence") != std::string::npos);
    r = sh("compute --algebra " + data("s3.json") + " --alpha '0 1 2 3 4 5' --beta '0 1 2 3 4 5'",
           "COMMUTATOR_KIT_DEBUG=1");
    CHECK(r.code == 0);
    CHECK(r.out == "0 3 4|1 2 5\n");
    r = sh("con");
    CHECK(r.code == 1);
}
