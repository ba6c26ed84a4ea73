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

#include "oracles.hpp"

#include "maxkcut/error.hpp"
#include "maxkcut/graph.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>

using namespace maxkcut;

TEST_CASE("graph normalizes and validates edges") {
    const Graph g(3, {{2, 0, 1.5}, {1, 0, 2.0}});
    REQUIRE(g.num_edges() == 2);
    CHECK(g.edges()[0] == Edge{0, 1, 2.0});
    CHECK(g.edges()[1] == Edge{0, 2, 1.5});
    CHECK(g.total_weight() == doctest::Approx(3.5));

    CHECK_THROWS_AS(Graph(3, {{0, 0, 1.0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 3, 1.0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 1, 1.0}, {1, 0, 2.0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 1, 0.0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 1, -1.0}}), InvalidArgument);
    CHECK_THROWS_AS(
        Graph(3, {{0, 1, std::numeric_limits<double>::quiet_NaN()}}),
        InvalidArgument);
    CHECK_THROWS_AS(Graph(0, {}), InvalidArgument);
}

TEST_CASE("cost counts cut weight") {
    const Graph tri(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 4.0}});
    CHECK(cost(tri, {{0, 1, 2}}) == 7.0);
    CHECK(cost(tri, {{0, 0, 1}}) == 6.0);
    CHECK(cost(tri, {{1, 1, 1}}) == 0.0);
    CHECK_THROWS_AS((void)cost(tri, {{0, 1}}), InvalidAssignment);
}

TEST_CASE("brute force small instances") {
    CHECK(brute_force_max_kcut(oracle::cycle(5), 2).optimum == 4.0);
    CHECK(brute_force_max_kcut(oracle::cycle(5), 3).optimum == 5.0);
    const Graph tri(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
    CHECK(brute_force_max_kcut(tri, 2).optimum == 2.0);
    CHECK(brute_force_max_kcut(tri, 3).optimum == 3.0);
    CHECK(brute_force_max_kcut(tri, 5).optimum == 3.0);

    const auto r = brute_force_max_kcut(oracle::cycle(4), 2);
    CHECK(r.optimum == 4.0);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].colors == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("brute force agrees with unpinned enumeration") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Graph g = oracle::random_graph(6, 0.6, seed);
        for (int k : {2, 3, 4}) {
            const auto r = brute_force_max_kcut(g, k);
            CHECK(r.optimum == doctest::Approx(oracle::max_kcut(g, k)));
            for (const auto &w : r.witnesses) {
                CHECK(w.colors[0] == 0);
                CHECK(cost(g, w) == r.optimum);
            }
        }
    }
}

TEST_CASE("brute force errors") {
    const Graph g = oracle::cycle(6);
    CHECK_THROWS_AS((void)brute_force_max_kcut(g, 1), InvalidArgument);
    BruteForceOptions opts;
    opts.max_assignments = 100;
    CHECK_THROWS_AS((void)brute_force_max_kcut(g, 3, opts), SizeLimitError);
}

TEST_CASE("edgeless graph has zero optimum") {
    const Graph g(4, {});
    const auto r = brute_force_max_kcut(g, 3);
    CHECK(r.optimum == 0.0);
    CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("Erdos-Renyi generator") {
    CHECK(generate_erdos_renyi(6, 0.0, 1).num_edges() == 0);
    CHECK(generate_erdos_renyi(6, 1.0, 1).num_edges() == 15);
    CHECK(generate_erdos_renyi(8, 0.5, 7) == generate_erdos_renyi(8, 0.5, 7));
    CHECK_FALSE(generate_erdos_renyi(8, 0.5, 7) ==
                generate_erdos_renyi(8, 0.5, 8));
    CHECK_THROWS_AS((void)generate_erdos_renyi(6, 1.5, 1), InvalidArgument);
    CHECK_THROWS_AS((void)generate_erdos_renyi(6, -0.1, 1), InvalidArgument);
    CHECK_THROWS_AS((void)generate_erdos_renyi(0, 0.5, 1), InvalidArgument);
}

TEST_CASE("Barabasi-Albert generator") {
    const Graph g = generate_barabasi_albert(10, 2, 3, 0.5, 2.0);
    CHECK(g.num_vertices() == 10);
    CHECK(g.num_edges() == 17);
    for (const auto &e : g.edges()) {
        CHECK(e.weight >= 0.5);
        CHECK(e.weight <= 2.0);
    }
    CHECK(g == generate_barabasi_albert(10, 2, 3, 0.5, 2.0));
    // every vertex past the seed clique attaches m edges
    std::vector<int> degree(10, 0);
    for (const auto &e : g.edges()) {
        ++degree[e.u];
        ++degree[e.v];
    }
    for (int d : degree)
        CHECK(d >= 1);
    CHECK_THROWS_AS((void)generate_barabasi_albert(5, 5, 1), InvalidArgument);
    CHECK_THROWS_AS((void)generate_barabasi_albert(5, 0, 1), InvalidArgument);
    CHECK_THROWS_AS((void)generate_barabasi_albert(5, 2, 1, 2.0, 1.0),
                    InvalidArgument);
}

TEST_CASE("graph JSON round trip") {
    const Graph g = generate_barabasi_albert(9, 2, 11, 0.25, 3.0);
    CHECK(parse_graph(to_json(g)) == g);

    const auto path = std::filesystem::temp_directory_path() /
                      "maxkcut_test_graph_roundtrip.json";
    save_graph(g, path);
    CHECK(load_graph(path) == g);
    std::filesystem::remove(path);
    CHECK_THROWS_AS((void)load_graph(path), Error);
}

TEST_CASE("edge list parsing") {
    const Graph g = parse_graph("# triangle\n0 1 1.0\n1 2 2.5\n\n2 0 1\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.total_weight() == doctest::Approx(4.5));

    auto line_of = [](const std::string &text) {
        try {
            (void)parse_graph(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("0 1 1\n1 1 1\n") == 2);
    CHECK(line_of("0 1 1\n1 2\n") == 2);
    CHECK(line_of("0 1 1\n\n1 0 2\n") == 3);
    CHECK(line_of("0 1 -1\n") == 1);
    CHECK(line_of("0 1 1 7\n") == 1);
    CHECK_THROWS_AS((void)parse_graph("# nothing\n"), ParseError);
}

TEST_CASE("JSON parse errors carry line numbers") {
    auto line_of = [](const std::string &text) {
        try {
            (void)parse_graph(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return -1;
    };
    const std::string self_loop = "{\n"
                                  "  \"num_vertices\": 3,\n"
                                  "  \"edges\": [\n"
                                  "    [0, 1, 1.0],\n"
                                  "    [2, 2, 1.0]\n"
                                  "  ]\n"
                                  "}\n";
    CHECK(line_of(self_loop) == 5);
    const std::string bad_range = "{\"num_vertices\": 2,\n"
                                  "\"edges\": [[0, 1, 1],\n"
                                  "[0, 5, 1]]}";
    CHECK(line_of(bad_range) == 3);
    CHECK(line_of("{\"num_vertices\": 2,\n \"edges\": [[0, 1, 1]\n") == 3);
    CHECK(line_of("{\"edges\": []}") == 1);
}
