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
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace maxkcut {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;
    double weight;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/**
 * Weighted undirected simple graph on vertices 0..num_vertices()-1.
 *
 * Edges are stored normalised (u < v) and sorted ascending by (u, v). The
 * constructor rejects self loops, duplicate undirected edges, out-of-range
 * vertex ids and non-positive or non-finite weights.
 */
class Graph {
  public:
    Graph() = default;
    Graph(int num_vertices, std::vector<Edge> edges);

    [[nodiscard]] int num_vertices() const noexcept { return num_vertices_; }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept {
        return edges_;
    }
    [[nodiscard]] std::size_t num_edges() const noexcept {
        return edges_.size();
    }
    [[nodiscard]] double total_weight() const noexcept;

    friend bool operator==(const Graph &, const Graph &) = default;

  private:
    int num_vertices_ = 0;
    std::vector<Edge> edges_;
};

/// One colour index in {0,...,k-1} per vertex.
struct Assignment {
    std::vector<int> colors;

    friend bool operator==(const Assignment &, const Assignment &) = default;
};

/// Total weight of edges whose endpoints carry different colours.
[[nodiscard]] double cost(const Graph &g, const Assignment &a);

struct BruteForceResult {
    double optimum = 0.0;
    std::vector<Assignment> witnesses;
};

struct BruteForceOptions {
    /// Upper bound on k^|V|.
    std::uint64_t max_assignments = 100'000'000;
    /// Witnesses beyond this count are not stored.
    std::size_t max_witnesses = 1024;
};

/// Exhaustive MAX k-CUT. Vertex 0 is pinned to colour 0, which is valid by
/// colour-label symmetry, so every witness has colors[0] == 0.
[[nodiscard]] BruteForceResult brute_force_max_kcut(const Graph &g, int k,
                                                    BruteForceOptions opts = {});

/// G(n, p) with unit weights. Pairs are visited in (u, v) lexicographic
/// order, one Bernoulli draw each, from a std::mt19937_64 seeded with seed.
[[nodiscard]] Graph generate_erdos_renyi(int n, double p, std::uint64_t seed);

/// Preferential attachment: start from the clique K_m, then every new
/// vertex joins m distinct existing vertices drawn with probability
/// proportional to degree. Produces m(m-1)/2 + m(n-m) edges with weights
/// uniform in [weight_low, weight_high].
[[nodiscard]] Graph generate_barabasi_albert(int n, int m, std::uint64_t seed,
                                             double weight_low = 1.0,
                                             double weight_high = 1.0);

/// JSON text: {"num_vertices": N, "edges": [[u, v, w], ...]}.
[[nodiscard]] std::string to_json(const Graph &g);

/// Parses either the JSON format or a whitespace separated "u v w" edge
/// list (one edge per line, '#' comments allowed, vertex count inferred).
[[nodiscard]] Graph parse_graph(const std::string &text);

[[nodiscard]] Graph load_graph(const std::filesystem::path &path);
void save_graph(const Graph &g, const std::filesystem::path &path);

} // namespace maxkcut
