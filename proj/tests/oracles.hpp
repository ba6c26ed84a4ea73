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

// Independent reference implementations used only by the tests.

#pragma once

#include "maxkcut/circuit.hpp"
#include "maxkcut/graph.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using maxkcut::Complex;

/// Max over all k^n colourings, nothing pinned.
inline double max_kcut(const maxkcut::Graph &g, int k) {
    const int n = g.num_vertices();
    std::vector<int> c(n, 0);
    double best = 0.0;
    while (true) {
        double w = 0.0;
        for (const auto &e : g.edges())
            if (c[e.u] != c[e.v])
                w += e.weight;
        best = std::max(best, w);
        int i = 0;
        while (i < n && ++c[i] == k)
            c[i++] = 0;
        if (i == n)
            break;
    }
    return best;
}

/// Expected cut weight under independent uniform colours.
inline double uniform_expectation(const maxkcut::Graph &g, int k) {
    return g.total_weight() * (1.0 - 1.0 / k);
}

inline maxkcut::Graph random_graph(int n, double p, std::uint64_t seed,
                                   bool weighted = true) {
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<maxkcut::Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (u(rng) < p)
                edges.push_back({a, b, weighted ? 0.5 + u(rng) : 1.0});
    return maxkcut::Graph(n, std::move(edges));
}

inline maxkcut::Graph cycle(int n) {
    std::vector<maxkcut::Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n, 1.0});
    return maxkcut::Graph(n, std::move(edges));
}

/// Matrix of a single-qubit operator on qubit q of n (qubit 0 leftmost).
inline Eigen::MatrixXcd on_qubit(const Eigen::Matrix2cd &m, int q, int n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int i = 0; i < n; ++i) {
        const Eigen::MatrixXcd f =
            i == q ? Eigen::MatrixXcd(m) : Eigen::MatrixXcd::Identity(2, 2);
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r)
            for (Eigen::Index c = 0; c < out.cols(); ++c)
                next.block(2 * r, 2 * c, 2, 2) = out(r, c) * f;
        out = next;
    }
    return out;
}

inline Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

inline Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

/// exp(-i beta sum_q X_q) as an n-fold tensor product of 2x2 blocks.
inline Eigen::MatrixXcd x_mixer(int n, double beta) {
    Eigen::Matrix2cd r;
    r << std::cos(beta), Complex(0, -std::sin(beta)), Complex(0, -std::sin(beta)),
        std::cos(beta);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1 << n, 1 << n);
    for (int q = 0; q < n; ++q)
        u = on_qubit(r, q, n) * u;
    return u;
}

inline std::vector<Complex> random_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d;
    std::vector<Complex> v(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : v) {
        a = {d(rng), d(rng)};
        norm += std::norm(a);
    }
    for (auto &a : v)
        a /= std::sqrt(norm);
    return v;
}

/// Random mix of every gate kind, with open and closed controls.
inline maxkcut::Circuit random_circuit(int n, int length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kind(0, 9);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    maxkcut::Circuit c(n);
    while (static_cast<int>(c.gates().size()) < length) {
        const int a = qubit(rng);
        int b = qubit(rng);
        int d = qubit(rng);
        if (b == a || d == a || d == b)
            continue;
        const double t = angle(rng);
        switch (kind(rng)) {
        case 0: c.append(maxkcut::gates::x(a)); break;
        case 1: c.append(maxkcut::gates::h(a)); break;
        case 2: c.append(maxkcut::gates::ph(a, t)); break;
        case 3: c.append(maxkcut::gates::rx(a, t)); break;
        case 4: c.append(maxkcut::gates::ry(a, t)); break;
        case 5: c.append(maxkcut::gates::rz(a, t)); break;
        case 6: c.append(maxkcut::gates::rxy(a, b, t)); break;
        case 7: c.append(maxkcut::gates::pauli_rot("XYZ", {a, b, d}, t)); break;
        case 8: c.append(maxkcut::gates::controlled(maxkcut::gates::ph(a, t), {b, d}, "01")); break;
        default: c.append(maxkcut::gates::controlled(maxkcut::gates::ry(a, t), {b}, "0")); break;
        }
    }
    return c;
}

} // namespace oracle
