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
#include "maxkcut/graph.hpp"

#include "maxkcut/error.hpp"
#include "maxkcut/random.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace maxkcut {

namespace {

void check_edges(int num_vertices, const std::vector<Edge> &edges) {
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto &e = edges[i];
        const auto where = "edge #" + std::to_string(i) + " (" +
                           std::to_string(e.u) + "," + std::to_string(e.v) +
                           ")";
        if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices)
            throw InvalidArgument(where + ": vertex id out of range");
        if (e.u == e.v)
            throw InvalidArgument(where + ": self loop");
        if (!std::isfinite(e.weight) || e.weight <= 0.0)
            throw InvalidArgument(where + ": weight must be finite and > 0");
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw InvalidArgument(where + ": duplicate edge");
    }
}

} // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices < 1)
        throw InvalidArgument("graph needs at least one vertex");
    check_edges(num_vertices_, edges_);
    for (auto &e : edges_)
        if (e.u > e.v)
            std::swap(e.u, e.v);
    std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
}

double Graph::total_weight() const noexcept {
    double w = 0.0;
    for (const auto &e : edges_)
        w += e.weight;
    return w;
}

double cost(const Graph &g, const Assignment &a) {
    if (a.colors.size() != static_cast<std::size_t>(g.num_vertices()))
        throw InvalidAssignment("assignment has " +
                                std::to_string(a.colors.size()) +
                                " entries, graph has " +
                                std::to_string(g.num_vertices()) + " vertices");
    double c = 0.0;
    for (const auto &e : g.edges())
        if (a.colors[e.u] != a.colors[e.v])
            c += e.weight;
    return c;
}

BruteForceResult brute_force_max_kcut(const Graph &g, int k,
                                      BruteForceOptions opts) {
    if (k < 2)
        throw InvalidArgument("brute force needs k >= 2");
    const int n = g.num_vertices();
    long double total = 1.0L;
    for (int i = 0; i < n; ++i)
        total *= k;
    if (total > static_cast<long double>(opts.max_assignments))
        throw SizeLimitError(std::to_string(k) + "^" + std::to_string(n) +
                             " assignments exceed the cap of " +
                             std::to_string(opts.max_assignments));

    BruteForceResult result;
    result.optimum = -1.0;
    Assignment a{std::vector<int>(n, 0)};
    // Base-k counter over vertices 1..n-1.
    while (true) {
        const double c = cost(g, a);
        if (c > result.optimum) {
            result.optimum = c;
            result.witnesses.clear();
        }
        if (c == result.optimum && result.witnesses.size() < opts.max_witnesses)
            result.witnesses.push_back(a);

        int pos = 1;
        while (pos < n && ++a.colors[pos] == k)
            a.colors[pos++] = 0;
        if (pos >= n)
            break;
    }
    return result;
}

Graph generate_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1)
        throw InvalidArgument("n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgument("edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(rng) < p)
                edges.push_back({u, v, 1.0});
    return Graph(n, std::move(edges));
}

Graph generate_barabasi_albert(int n, int m, std::uint64_t seed,
                               double weight_low, double weight_high) {
    if (m < 1 || m >= n)
        throw InvalidArgument("Barabasi-Albert needs 1 <= m < n");
    if (!(weight_low > 0.0) || !(weight_high >= weight_low) ||
        !std::isfinite(weight_high))
        throw InvalidArgument("weights need 0 < weight_low <= weight_high");

    Rng rng(seed);
    auto draw_weight = [&] {
        return weight_low + (weight_high - weight_low) * uniform01(rng);
    };
    std::vector<Edge> edges;
    std::vector<int> degree(n, 0);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            edges.push_back({u, v, draw_weight()});
            ++degree[u];
            ++degree[v];
        }

    for (int v = m; v < n; ++v) {
        std::vector<int> targets;
        std::vector<char> taken(v, 0);
        for (int j = 0; j < m; ++j) {
            long total = 0;
            for (int u = 0; u < v; ++u)
                if (!taken[u])
                    total += degree[u];
            int chosen = -1;
            if (total == 0) {
                // All remaining candidates are isolated: pick uniformly.
                std::vector<int> free;
                for (int u = 0; u < v; ++u)
                    if (!taken[u])
                        free.push_back(u);
                chosen = free[static_cast<std::size_t>(uniform01(rng) *
                                                       free.size())];
            } else {
                double r = uniform01(rng) * static_cast<double>(total);
                for (int u = 0; u < v; ++u) {
                    if (taken[u])
                        continue;
                    chosen = u;
                    r -= degree[u];
                    if (r < 0.0)
                        break;
                }
            }
            taken[chosen] = 1;
            targets.push_back(chosen);
        }
        for (int u : targets) {
            edges.push_back({u, v, draw_weight()});
            ++degree[u];
            ++degree[v];
        }
    }
    return Graph(n, std::move(edges));
}

std::string to_json(const Graph &g) {
    nlohmann::ordered_json j;
    j["num_vertices"] = g.num_vertices();
    j["edges"] = nlohmann::json::array();
    for (const auto &e : g.edges())
        j["edges"].push_back({e.u, e.v, e.weight});
    return j.dump(2) + "\n";
}

namespace {

int line_of_offset(const std::string &text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(),
                                           text.begin() + offset, '\n'));
}

/// Line of the index-th element of the top-level "edges" array.
int line_of_edge(const std::string &text, std::size_t index) {
    const auto key = text.find("\"edges\"");
    if (key == std::string::npos)
        return 0;
    int depth = 0;
    std::size_t seen = 0;
    bool in_string = false;
    for (std::size_t i = text.find('[', key); i < text.size(); ++i) {
        const char c = text[i];
        if (c == '"')
            in_string = !in_string;
        if (in_string)
            continue;
        if (c == '[' && ++depth == 2 && seen++ == index)
            return line_of_offset(text, i);
        if (c == ']' && --depth == 0)
            break;
    }
    return 0;
}

Graph parse_json_graph(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &err) {
        throw ParseError(err.what(), line_of_offset(text, err.byte));
    }
    if (!j.is_object() || !j.contains("num_vertices") || !j.contains("edges") ||
        !j["num_vertices"].is_number_integer() || !j["edges"].is_array())
        throw ParseError("expected {\"num_vertices\": N, \"edges\": [...]}",
                         1);
    const int n = j["num_vertices"].get<int>();
    if (n < 1)
        throw ParseError("num_vertices must be >= 1",
                         line_of_offset(text, text.find("num_vertices")));
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    const auto &rows = j["edges"];
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &row = rows[i];
        auto fail = [&](const std::string &what) {
            throw ParseError("edge #" + std::to_string(i) + ": " + what,
                             line_of_edge(text, i));
        };
        if (!row.is_array() || row.size() != 3 ||
            !row[0].is_number_integer() || !row[1].is_number_integer() ||
            !row[2].is_number())
            fail("expected [u, v, w]");
        const int u = row[0].get<int>();
        const int v = row[1].get<int>();
        const double w = row[2].get<double>();
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail("vertex id out of range");
        if (u == v)
            fail("self loop");
        if (!std::isfinite(w) || w <= 0.0)
            fail("weight must be finite and > 0");
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            fail("duplicate edge");
        edges.push_back({u, v, w});
    }
    return Graph(n, std::move(edges));
}

Graph parse_edge_list(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    int max_vertex = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream row(line);
        int u = 0;
        int v = 0;
        double w = 0.0;
        if (!(row >> u))
            continue;
        if (!(row >> v >> w))
            throw ParseError("expected 'u v w'", lineno);
        std::string extra;
        if (row >> extra)
            throw ParseError("trailing token '" + extra + "'", lineno);
        if (u < 0 || v < 0)
            throw ParseError("negative vertex id", lineno);
        if (u == v)
            throw ParseError("self loop", lineno);
        if (!std::isfinite(w) || w <= 0.0)
            throw ParseError("weight must be finite and > 0", lineno);
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw ParseError("duplicate edge", lineno);
        max_vertex = std::max({max_vertex, u, v});
        edges.push_back({u, v, w});
    }
    if (max_vertex < 0)
        throw ParseError("no edges found", 0);
    return Graph(max_vertex + 1, std::move(edges));
}

} // namespace

Graph parse_graph(const std::string &text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_json_graph(text);
    return parse_edge_list(text);
}

Graph load_graph(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void save_graph(const Graph &g, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path.string());
    out << to_json(g);
}

} // namespace maxkcut
