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
#include "maxkcut/ansatz.hpp"

#include "maxkcut/error.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

namespace maxkcut {

std::string to_string(RelationVariant v) {
    switch (v) {
    case RelationVariant::Trivial:
        return "trivial";
    case RelationVariant::LessThan:
        return "less_than";
    case RelationVariant::Balanced:
        return "balanced";
    }
    return "?";
}

ColorRelation relation_for(int k, RelationVariant v) {
    if (is_power_of_two(k))
        return clr_trivial(qubits_per_color(k));
    if (v == RelationVariant::Trivial)
        throw InvalidArgument("trivial relation needs k a power of two, got " +
                              std::to_string(k));
    return v == RelationVariant::LessThan ? clr_less_than_k(k)
                                          : clr_balanced(k);
}

namespace {

using gates::controlled;
using gates::cx;
using gates::x;

/// e^{it} on states where controls match pattern and target == value.
void phase_on(Circuit &c, std::vector<int> controls, std::string pattern,
              int target, int value, double t) {
    if (value == 0)
        c.append(x(target));
    c.append(controlled(gates::ph(target, t), std::move(controls),
                        std::move(pattern)));
    if (value == 0)
        c.append(x(target));
}

} // namespace

Circuit phase_separator_power2(int n_k, double t) {
    if (n_k < 1)
        throw InvalidArgument("n_k must be >= 1");
    Circuit c(2 * n_k);
    for (int i = 0; i < n_k; ++i)
        c.append(cx(i, i + n_k));
    std::vector<int> controls;
    for (int q = n_k; q < 2 * n_k - 1; ++q)
        controls.push_back(q);
    phase_on(c, controls, std::string(controls.size(), '0'), 2 * n_k - 1, 0,
             t);
    for (int i = n_k - 1; i >= 0; --i)
        c.append(cx(i, i + n_k));
    return c;
}

Circuit phase_separator_2l_plus1(int l, double t) {
    if (l < 1)
        throw InvalidArgument("l must be >= 1");
    const int n = l + 1;
    Circuit c(2 * n);
    // Labels below 2^l: leading bits are 0, the rest must agree.
    for (int i = 1; i < n; ++i)
        c.append(cx(i, i + n));
    std::vector<int> controls{0};
    for (int q = n; q < 2 * n - 1; ++q)
        controls.push_back(q);
    phase_on(c, controls, std::string(controls.size(), '0'), 2 * n - 1, 0, t);
    for (int i = n - 1; i >= 1; --i)
        c.append(cx(i, i + n));
    // Merged colour: both leading bits are 1.
    c.append(controlled(gates::ph(n, t), {0}));
    return c;
}

namespace {

// Pieces of the three-qubit constructions. Qubits 0..2 hold label a,
// 3..5 hold label b.

/// B1 = <X0X3, X1X4, X2X5>|000000>: a == b. Leaves the CX ladder applied
/// except for the gates listed in `keep`.
void diagonal_piece(Circuit &c, double t, bool uncompute_cx03,
                    bool uncompute_cx25) {
    c.append(cx(0, 3)).append(cx(1, 4)).append(cx(2, 5));
    phase_on(c, {3, 4}, "00", 5, 0, t);
    if (uncompute_cx25)
        c.append(cx(2, 5));
    c.append(cx(1, 4));
    if (uncompute_cx03)
        c.append(cx(0, 3));
}

/// B2 = <X0X3, X2X5>|000001>: cross pairs of {0,1} and {4,5}. Expects
/// CX(0,3) already applied and removes it at the end.
void pairs_01_45_piece(Circuit &c, double t) {
    c.append(controlled(x(2), {5}, "0"));
    phase_on(c, {1, 2, 3}, "000", 4, 0, t);
    c.append(controlled(x(2), {5}, "0"));
    c.append(cx(0, 3));
}

/// B3 = <X2X5>|111110>: cross pair of {6,7}. Expects qubits 3, 4 to hold
/// b and qubit 5 to hold b2 unless cx25_applied.
void pair_67_piece(Circuit &c, double t, bool cx25_applied) {
    if (!cx25_applied)
        c.append(cx(2, 5));
    phase_on(c, {0, 1, 3, 4}, "1111", 5, 1, t);
    c.append(cx(2, 5));
}

} // namespace

Circuit phase_separator_k(int k, RelationVariant v, double t) {
    if (v == RelationVariant::Trivial)
        throw InvalidArgument("phase_separator_k needs a nontrivial relation");
    Circuit c(6);
    switch (k) {
    case 3:
        return phase_separator_2l_plus1(1, t);
    case 5:
        if (v == RelationVariant::LessThan)
            return phase_separator_2l_plus1(2, t);
        diagonal_piece(c, t, /*uncompute_cx03=*/false, true);
        pairs_01_45_piece(c, t);
        pair_67_piece(c, t, false);
        return c;
    case 6:
        if (v == RelationVariant::Balanced) {
            diagonal_piece(c, t, false, true);
            pairs_01_45_piece(c, t);
            return c;
        }
        diagonal_piece(c, t, true, true);
        // (5, 6), (5, 7)
        phase_on(c, {0, 1, 2, 3}, "1011", 4, 1, t);
        // (6,5), (6,7), (7,5), (7,6) after the Toffoli basis change.
        c.append(controlled(x(5), {2, 4}));
        phase_on(c, {0, 1, 3}, "111", 5, 1, t);
        c.append(controlled(x(5), {2, 4}));
        return c;
    case 7:
        diagonal_piece(c, t, true, /*uncompute_cx25=*/false);
        pair_67_piece(c, t, true);
        return c;
    default:
        throw InvalidArgument("no hand-built separator for k=" +
                              std::to_string(k));
    }
}

bool has_separator_circuit(int k, RelationVariant v) {
    if (k < 2)
        return false;
    if (is_power_of_two(k))
        return true;
    if (v == RelationVariant::Trivial)
        return false;
    if (k == 3 || k == 5 || k == 6 || k == 7)
        return true;
    return v == RelationVariant::LessThan && is_power_of_two(k - 1);
}

Circuit phase_separator_circuit(int k, RelationVariant v, double t) {
    if (!has_separator_circuit(k, v))
        throw InvalidArgument("no separator circuit for k=" +
                              std::to_string(k) + " (" + to_string(v) + ")");
    if (is_power_of_two(k))
        return phase_separator_power2(qubits_per_color(k), t);
    if (k == 5 || k == 6 || k == 7)
        return phase_separator_k(k, v, t);
    return phase_separator_2l_plus1(qubits_per_color(k) - 1, t);
}

std::vector<Complex> phase_separator_oracle(const ColorRelation &rel,
                                            double t) {
    const int n = rel.num_qubits();
    const int size = rel.domain_size();
    std::vector<Complex> phases(static_cast<std::size_t>(size) * size, 1.0);
    const Complex on = std::polar(1.0, t);
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (rel.equivalent(a, b))
                phases[(static_cast<std::size_t>(a) << n) | b] = on;
    return phases;
}

Circuit prepare_plus(int n) {
    Circuit c(n);
    for (int q = 0; q < n; ++q)
        c.append(gates::h(q));
    return c;
}

Circuit prepare_subspace(int k, bool phase_correction) {
    using std::numbers::pi;
    const double third = 2.0 * std::acos(1.0 / std::sqrt(3.0));
    switch (k) {
    case 3: {
        Circuit c(2);
        c.append(gates::ry(0, third));
        c.append(gates::rxy(0, 1, pi / 2));
        if (phase_correction)
            c.append(gates::ph(1, pi / 2));
        return c;
    }
    case 5: {
        Circuit c(3);
        c.append(gates::ry(0, 2.0 * std::asin(1.0 / std::sqrt(5.0))));
        c.append(controlled(gates::h(1), {0}, "0"));
        c.append(controlled(gates::h(2), {0}, "0"));
        return c;
    }
    case 6: {
        Circuit c(3);
        c.append(gates::ry(1, third));
        c.append(gates::ry(2, pi / 2));
        c.append(gates::rxy(0, 1, pi / 2));
        if (phase_correction)
            c.append(gates::ph(0, pi / 2));
        return c;
    }
    case 7: {
        Circuit c(3);
        c.append(gates::ry(0, 2.0 * std::asin(1.0 / std::sqrt(7.0))));
        c.append(cx(0, 1));
        c.append(controlled(gates::ry(2, pi / 2), {0}, "0"));
        c.append(controlled(gates::ry(1, third), {0}, "0"));
        c.append(gates::rxy(0, 1, pi / 2));
        if (phase_correction)
            c.append(controlled(gates::ph(0, pi / 2), {1}, "0"));
        return c;
    }
    default:
        throw InvalidArgument("no subspace preparation for k=" +
                              std::to_string(k));
    }
}

Circuit mixer_x(int n, double beta) {
    Circuit c(n);
    for (int q = 0; q < n; ++q)
        c.append(gates::rx(q, 2.0 * beta));
    return c;
}

const std::vector<LxTerm> &lx_terms(int k) {
    static const std::map<int, std::vector<LxTerm>> terms{
        {3, {{"IX", {"ZI"}}, {"XI", {"IZ"}}}},
        {5, {{"XII", {"IZI", "IIZ"}}, {"IXI", {"ZII"}}, {"IIX", {"ZII"}}}},
        {6, {{"XII", {"IZI"}}, {"IXI", {"ZII"}}, {"IIX", {"III"}}}},
        {7, {{"XII", {"IZI"}}, {"IXI", {"IIZ"}}, {"IIX", {"ZII"}}}},
    };
    const auto it = terms.find(k);
    if (it == terms.end())
        throw InvalidArgument("no LX mixer for k=" + std::to_string(k));
    return it->second;
}

namespace {

/// Product of two Pauli strings with disjoint non-identity supports.
std::string disjoint_product(const std::string &a, const std::string &b) {
    std::string out = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] == 'I')
            continue;
        if (a[i] != 'I')
            throw InvalidArgument("LX term " + a + " overlaps generator " + b);
        out[i] = b[i];
    }
    return out;
}

} // namespace

Circuit mixer_lx(int k, double beta) {
    const int n = qubits_per_color(k);
    Circuit c(n);
    std::vector<int> qubits(n);
    std::iota(qubits.begin(), qubits.end(), 0);
    for (const auto &term : lx_terms(k)) {
        std::vector<std::string> gens;
        for (const auto &g : term.generators)
            if (g.find_first_not_of('I') != std::string::npos)
                gens.push_back(g);
        const std::size_t group = std::size_t{1} << gens.size();
        const double angle = 2.0 * beta / static_cast<double>(group);
        for (std::size_t mask = 0; mask < group; ++mask) {
            std::string s = term.x_part;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if ((mask >> j) & 1)
                    s = disjoint_product(s, gens[j]);
            c.append(gates::pauli_rot(s, qubits, angle));
        }
    }
    return c;
}

Circuit mixer_grover(const Circuit &prep, double beta) {
    const int n = prep.num_qubits();
    if (n < 1)
        throw InvalidArgument("Grover mixer needs at least one qubit");
    Circuit c(n);
    c.append(prep.inverse());
    std::vector<int> controls(n - 1);
    std::iota(controls.begin(), controls.end(), 0);
    phase_on(c, controls, std::string(n - 1, '0'), n - 1, 0, -beta);
    c.append(prep);
    return c;
}

Circuit mixer_grover(const Circuit &block_prep, double beta, GroverScope scope,
                     int num_blocks) {
    const int nb = block_prep.num_qubits();
    if (num_blocks < 1)
        throw InvalidArgument("need at least one register");
    Circuit c(nb * num_blocks);
    if (scope == GroverScope::PerVertex) {
        const Circuit block = mixer_grover(block_prep, beta);
        for (int v = 0; v < num_blocks; ++v)
            c.append(block, v * nb);
        return c;
    }
    Circuit prep(nb * num_blocks);
    for (int v = 0; v < num_blocks; ++v)
        prep.append(block_prep, v * nb);
    return mixer_grover(prep, beta);
}

Eigen::MatrixXcd box_product(const Eigen::MatrixXcd &g,
                             const Eigen::MatrixXcd &h) {
    if (g.rows() != g.cols() || h.rows() != h.cols())
        throw InvalidArgument("box product needs square matrices");
    const auto a = g.rows();
    const auto b = h.rows();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(a * b, a * b);
    for (Eigen::Index i = 0; i < a; ++i)
        for (Eigen::Index j = 0; j < a; ++j)
            out.block(i * b, j * b, b, b) +=
                g(i, j) * Eigen::MatrixXcd::Identity(b, b);
    for (Eigen::Index i = 0; i < a; ++i)
        out.block(i * b, i * b, b, b) += h;
    return out;
}

MixerReport validate_mixer(const std::function<Circuit(double)> &mixer,
                           const std::vector<int> &feasible,
                           const std::vector<double> &betas) {
    MixerReport report;
    if (feasible.empty() || betas.empty())
        throw InvalidArgument("validate_mixer needs feasible states and betas");
    const std::size_t m = feasible.size();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> in_b;
    for (double beta : betas) {
        const Eigen::MatrixXcd u = unitary(mixer(beta));
        if (in_b.empty()) {
            in_b.assign(u.rows(), 0);
            for (int x : feasible)
                in_b.at(x) = 1;
        }
        for (int y : feasible) {
            double leaked = 0.0;
            for (Eigen::Index x = 0; x < u.rows(); ++x)
                if (!in_b[x])
                    leaked += std::norm(u(x, y));
            leaked = std::sqrt(leaked);
            if (leaked > report.max_leakage) {
                report.max_leakage = leaked;
                report.detail = "state " + std::to_string(y) +
                                " leaks " + std::to_string(leaked) +
                                " at beta=" + std::to_string(beta);
            }
        }
        Eigen::MatrixXcd power = u;
        for (std::size_t r = 1; r <= m; ++r) {
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    if (a == b ||
                        std::abs(power(feasible[a], feasible[b])) <= 1e-8)
                        continue;
                    parent[find(static_cast<int>(a))] =
                        find(static_cast<int>(b));
                    if (r == 1)
                        report.direct_transitions.emplace(
                            std::min(feasible[a], feasible[b]),
                            std::max(feasible[a], feasible[b]));
                }
            power = u * power;
        }
    }
    report.preserves = report.max_leakage < 1e-10;
    report.connected = true;
    for (std::size_t a = 0; a < m; ++a)
        if (find(static_cast<int>(a)) != find(0))
            report.connected = false;
    if (report.preserves)
        report.detail.clear();
    if (!report.connected)
        report.detail += (report.detail.empty() ? "" : "; ") +
                         std::string("transition graph is disconnected");
    return report;
}

} // namespace maxkcut
