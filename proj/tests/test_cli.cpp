// Copyright 2026 The maxkcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include "maxkcut/graph.hpp"
#include "maxkcut/qaoa.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace maxkcut;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "maxkcut");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("maxkcut_cli_" + std::to_string(std::rand()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    [[nodiscard]] std::string file(const std::string &name) const {
        return (path / name).string();
    }
};

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string write_triangle(const TempDir &dir) {
    const std::string p = dir.file("triangle.txt");
    std::ofstream(p) << "0 1 1\n1 2 1\n0 2 1\n";
    return p;
}

nlohmann::json strip_times(nlohmann::json j) {
    for (auto &r : j)
        r.erase("wall_seconds");
    return j;
}

} // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"resources", "--k", "3", "--bogus"}).code == cli::kExitUsage);
    CHECK(run({"gen-graph", "xx", "--n", "4"}).code == cli::kExitUsage);
    const auto help = run({"--help"});
    CHECK(help.code == cli::kExitOk);
    CHECK(help.out.find("gen-graph") != std::string::npos);
}

TEST_CASE("gen-graph writes graphs that reload") {
    TempDir dir;
    const auto er = run({"gen-graph", "er", "--n", "6", "--p", "0.5", "--seed",
                         "1", "--out", dir.file("er.json")});
    REQUIRE(er.code == 0);
    CHECK(er.out.find("|V|=6") != std::string::npos);
    const Graph g = load_graph(dir.file("er.json"));
    CHECK(g.num_vertices() == 6);
    CHECK(g == generate_erdos_renyi(6, 0.5, 1));

    const auto ba = run({"gen-graph", "ba", "--n", "10", "--m", "2", "--seed",
                         "3", "--weight-low", "0.5", "--weight-high", "2",
                         "--out", dir.file("sub/ba.json")});
    REQUIRE(ba.code == 0);
    const Graph h = load_graph(dir.file("sub/ba.json"));
    CHECK(h.num_edges() == 17);
    bool weighted = false;
    for (const auto &e : h.edges())
        weighted |= e.weight != 1.0;
    CHECK(weighted);

    const auto bad = run({"gen-graph", "er", "--n", "6", "--p", "1.5",
                          "--out", dir.file("bad.json")});
    CHECK(bad.code != 0);
    CHECK_FALSE(bad.err.empty());
    CHECK_FALSE(fs::exists(dir.file("bad.json")));
}

TEST_CASE("output directory from the environment") {
    TempDir dir;
    ::setenv(cli::kOutDirEnv, dir.path.c_str(), 1);
    const auto r = run({"gen-graph", "er", "--n", "4", "--seed", "2", "--out",
                        "env.json"});
    ::unsetenv(cli::kOutDirEnv);
    CHECK(r.code == 0);
    CHECK(fs::exists(dir.path / "env.json"));
    CHECK(cli::resolve_output("/abs/x.json") == fs::path("/abs/x.json"));
}

TEST_CASE("brute-force") {
    TempDir dir;
    const auto tri = write_triangle(dir);
    const auto r = run({"brute-force", "--graph", tri, "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("optimum 2 ") != std::string::npos);
    const auto j = run({"brute-force", "--graph", tri, "--k", "3", "--json"});
    CHECK(nlohmann::json::parse(j.out).at("optimum") == 3.0);
    CHECK(run({"brute-force", "--graph", dir.file("missing.json"), "--k", "3"})
              .code != 0);
}

TEST_CASE("validate suites pass") {
    for (const char *scope : {"separators", "mixers", "preps"}) {
        const auto r = run({"validate", scope});
        CHECK(r.code == 0);
        CHECK(r.out.find("FAIL") == std::string::npos);
        CHECK(r.out.find("PASS") != std::string::npos);
    }
    CHECK(run({"validate", "nothing"}).code == cli::kExitUsage);
}

TEST_CASE("landscape CSV") {
    TempDir dir;
    const auto tri = write_triangle(dir);
    const std::vector<std::string> args{
        "landscape", "--graph", tri, "--k", "3", "--encoding", "full-lt",
        "--mixer", "x", "--resolution", "64", "--out", dir.file("a.csv")};
    const auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("max alpha") != std::string::npos);
    const std::string csv = slurp(dir.file("a.csv"));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "gamma,beta,alpha");
    int rows = 0;
    double best = 0.0;
    while (std::getline(in, line)) {
        ++rows;
        best = std::max(best, std::stod(line.substr(line.rfind(',') + 1)));
    }
    CHECK(rows == 4096);

    auto again = args;
    again.back() = dir.file("b.csv");
    REQUIRE(run(again).code == 0);
    CHECK(slurp(dir.file("b.csv")) == csv);

    const auto opt = run({"optimize", "--graph", tri, "--k", "3", "--encoding",
                          "full-lt", "--mixer", "x", "--p-max", "1", "--out",
                          dir.file("o.json")});
    REQUIRE(opt.code == 0);
    const auto rec = nlohmann::json::parse(slurp(dir.file("o.json")));
    CHECK(best <= rec[0].at("alpha").get<double>() + 1e-9);

    const auto bad = run({"landscape", "--graph", tri, "--k", "3",
                          "--encoding", "subspace", "--mixer", "x"});
    CHECK(bad.code == cli::kExitUsage);
}

TEST_CASE("optimize depth sweep") {
    TempDir dir;
    const auto tri = write_triangle(dir);
    const std::vector<std::string> args{
        "optimize", "--graph", tri,  "--k",     "3",  "--encoding", "subspace",
        "--mixer",  "lx",     "--p-max", "3", "--seed", "9",  "--grid",
        "16",       "--out",  dir.file("a.json")};
    REQUIRE(run(args).code == 0);
    const auto a = nlohmann::json::parse(slurp(dir.file("a.json")));
    REQUIRE(a.size() == 3);
    for (std::size_t i = 1; i < 3; ++i)
        CHECK(a[i].at("alpha").get<double>() >=
              a[i - 1].at("alpha").get<double>() - 5e-3);
    CHECK(a[2].at("seed") == 9);
    // records parse back
    CHECK(run_record_from_json(a[1].dump()).depth == 2);

    auto again = args;
    again.back() = dir.file("b.json");
    REQUIRE(run(again).code == 0);
    CHECK(strip_times(a) ==
          strip_times(nlohmann::json::parse(slurp(dir.file("b.json")))));
}

TEST_CASE("optimize reports the size cap") {
    TempDir dir;
    const auto tri = write_triangle(dir);
    const auto r = run({"optimize", "--graph", tri, "--k", "5", "--max-qubits",
                        "6", "--out", dir.file("x.json")});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("9 qubits") != std::string::npos);
}

TEST_CASE("resources") {
    const auto k5 = run({"resources", "--k", "5", "--encoding", "full-lt",
                         "--mixer", "x", "--vertices", "6", "--edges", "9"});
    CHECK(k5.code == 0);
    CHECK(k5.out.find("1CPh, 1C³Ph, 4CX per edge") != std::string::npos);
    CHECK(k5.out.find("prior work: 1C²Ph, 12(4C³X, 1C²Ph), 6CX") !=
          std::string::npos);

    const auto js = run({"resources", "--k", "3", "--encoding", "subspace",
                         "--mixer", "lx", "--vertices", "4", "--edges", "5",
                         "--json"});
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j.at("mixer_cx") == 4);
    CHECK(j.at("layer_cx") == j.at("separator_cx").get<long>() * 5 + 16);

    CHECK(run({"resources", "--k", "4", "--encoding", "full-lt", "--mixer",
               "lx"})
              .code == cli::kExitUsage);
}
