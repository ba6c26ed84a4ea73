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
#include "maxkcut/circuit.hpp"

#include "maxkcut/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

namespace maxkcut {

namespace gates {

namespace {
Gate single(GateKind kind, int q, double t = 0.0) {
    Gate g;
    g.kind = kind;
    g.targets = {q};
    g.param = t;
    return g;
}
} // namespace

Gate x(int q) { return single(GateKind::X, q); }
Gate h(int q) { return single(GateKind::H, q); }
Gate ph(int q, double t) { return single(GateKind::Ph, q, t); }
Gate rx(int q, double t) { return single(GateKind::Rx, q, t); }
Gate ry(int q, double t) { return single(GateKind::Ry, q, t); }
Gate rz(int q, double t) { return single(GateKind::Rz, q, t); }

Gate rxy(int a, int b, double t) {
    Gate g;
    g.kind = GateKind::RXY;
    g.targets = {a, b};
    g.param = t;
    return g;
}

Gate pauli_rot(const std::string &pauli, std::vector<int> qubits,
               double theta) {
    Gate g;
    g.kind = GateKind::PauliRot;
    g.targets = std::move(qubits);
    g.pauli = pauli;
    g.param = theta;
    return g;
}

Gate cx(int control, int target) { return controlled(x(target), {control}); }

Gate controlled(Gate g, std::vector<int> controls, std::string pattern) {
    if (pattern.empty())
        pattern.assign(controls.size(), '1');
    g.controls.insert(g.controls.end(), controls.begin(), controls.end());
    g.pattern += pattern;
    return g;
}

} // namespace gates

Gate Gate::inverse() const {
    Gate g = *this;
    if (kind != GateKind::X && kind != GateKind::H)
        g.param = -param;
    return g;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0)
        throw InvalidArgument("negative qubit count");
}

Circuit &Circuit::append(Gate g) {
    const std::size_t expected_targets =
        g.kind == GateKind::RXY        ? 2
        : g.kind == GateKind::PauliRot ? g.pauli.size()
                                       : 1;
    if (g.targets.size() != expected_targets || g.targets.empty())
        throw InvalidArgument("gate " + gate_class(g) + " has " +
                              std::to_string(g.targets.size()) + " targets");
    if (g.pattern.size() != g.controls.size())
        throw InvalidArgument("control pattern length differs from controls");
    if (g.pattern.find_first_not_of("01") != std::string::npos)
        throw InvalidArgument("control pattern must contain only 0 and 1");
    if (g.kind == GateKind::PauliRot) {
        if (g.pauli.find_first_not_of("IXYZ") != std::string::npos)
            throw InvalidArgument("Pauli string must be over I, X, Y, Z");
        if (g.pauli.find_first_not_of('I') == std::string::npos)
            throw InvalidArgument("Pauli string is the identity");
    }
    std::set<int> used;
    for (int q : g.targets)
        used.insert(q);
    for (int q : g.controls)
        used.insert(q);
    if (used.size() != g.targets.size() + g.controls.size())
        throw InvalidArgument("gate " + gate_class(g) +
                              " repeats a qubit index");
    if (*used.begin() < 0 || *used.rbegin() >= num_qubits_)
        throw InvalidArgument("gate " + gate_class(g) + " uses qubit " +
                              std::to_string(*used.rbegin()) + " of a " +
                              std::to_string(num_qubits_) + "-qubit circuit");
    gates_.push_back(std::move(g));
    return *this;
}

Circuit &Circuit::append(const Circuit &other, int offset) {
    if (offset < 0 || offset + other.num_qubits() > num_qubits_)
        throw InvalidArgument("circuit of width " +
                              std::to_string(other.num_qubits()) +
                              " at offset " + std::to_string(offset) +
                              " does not fit in " + std::to_string(num_qubits_) +
                              " qubits");
    for (Gate g : other.gates()) {
        for (int &q : g.targets)
            q += offset;
        for (int &q : g.controls)
            q += offset;
        append(std::move(g));
    }
    return *this;
}

Circuit &Circuit::append_mapped(const Circuit &other,
                                const std::vector<int> &qubit_map) {
    if (qubit_map.size() < static_cast<std::size_t>(other.num_qubits()))
        throw InvalidArgument("qubit map shorter than the circuit width");
    for (Gate g : other.gates()) {
        for (int &q : g.targets)
            q = qubit_map[q];
        for (int &q : g.controls)
            q = qubit_map[q];
        append(std::move(g));
    }
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out(num_qubits_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
        out.gates_.push_back(it->inverse());
    return out;
}

namespace {

const char *kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::X:
        return "X";
    case GateKind::H:
        return "H";
    case GateKind::Ph:
        return "Ph";
    case GateKind::Rx:
        return "Rx";
    case GateKind::Ry:
        return "Ry";
    case GateKind::Rz:
        return "Rz";
    case GateKind::RXY:
        return "RXY";
    case GateKind::PauliRot:
        return "PauliRot";
    }
    return "?";
}

GateKind kind_from_name(const std::string &name) {
    for (auto kind : {GateKind::X, GateKind::H, GateKind::Ph, GateKind::Rx,
                      GateKind::Ry, GateKind::Rz, GateKind::RXY,
                      GateKind::PauliRot})
        if (name == kind_name(kind))
            return kind;
    throw ParseError("unknown gate '" + name + "'", 0);
}

} // namespace

std::string gate_class(const Gate &g) {
    std::string prefix;
    if (g.num_controls() == 1)
        prefix = "C";
    else if (g.num_controls() > 1)
        prefix = "C" + std::to_string(g.num_controls());
    if (g.kind == GateKind::PauliRot)
        return prefix + "Pauli" +
               std::to_string(std::count_if(g.pauli.begin(), g.pauli.end(),
                                            [](char c) { return c != 'I'; }));
    return prefix + kind_name(g.kind);
}

Census census(const Circuit &c, bool include_bare_x) {
    Census out;
    for (const auto &g : c.gates()) {
        if (!include_bare_x && g.kind == GateKind::X && g.controls.empty())
            continue;
        ++out[gate_class(g)];
    }
    return out;
}

namespace {

struct ClassParts {
    int controls = 0;
    std::string base;
};

ClassParts split_class(const std::string &name) {
    ClassParts p;
    p.base = name;
    if (name.size() > 1 && name[0] == 'C' &&
        (std::isdigit(static_cast<unsigned char>(name[1])) ||
         std::isupper(static_cast<unsigned char>(name[1])))) {
        std::size_t i = 1;
        while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i])))
            ++i;
        p.controls = i == 1 ? 1 : std::stoi(name.substr(1, i - 1));
        p.base = name.substr(i);
    }
    return p;
}

std::string superscript(int n) {
    static const char *digits[] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char c : std::to_string(n))
        out += digits[c - '0'];
    return out;
}

} // namespace

std::string format_census(const Census &census) {
    std::vector<std::pair<std::string, int>> items(census.begin(),
                                                   census.end());
    auto rank = [](const std::string &name) {
        const auto p = split_class(name);
        if (p.base == "Ph")
            return std::tuple(0, p.controls, name);
        if (p.base == "X")
            return std::tuple(1, -p.controls, name);
        return std::tuple(2, 0, name);
    };
    std::sort(items.begin(), items.end(), [&](const auto &a, const auto &b) {
        return rank(a.first) < rank(b.first);
    });
    std::string out;
    for (const auto &[name, count] : items) {
        if (!out.empty())
            out += ", ";
        const auto p = split_class(name);
        out += std::to_string(count);
        if (p.controls == 1)
            out += "C";
        else if (p.controls > 1)
            out += "C" + superscript(p.controls);
        out += p.base;
    }
    return out;
}

DecompositionTable default_decomposition_table() {
    DecompositionTable t{
        {"X", 0},     {"H", 0},     {"Ph", 0},     {"Rx", 0},
        {"Ry", 0},    {"Rz", 0},    {"RXY", 2},    {"CX", 1},
        {"C2X", 6},   {"CPh", 2},   {"C2Ph", 8},   {"C3Ph", 20},
        {"C4Ph", 44}, {"CH", 1},    {"CRy", 2},
    };
    for (int w = 1; w <= 16; ++w)
        t["Pauli" + std::to_string(w)] = 2 * (w - 1);
    return t;
}

DecompositionTable decomposition_table_from_json(const std::string &text) {
    try {
        return nlohmann::json::parse(text).get<DecompositionTable>();
    } catch (const nlohmann::json::exception &err) {
        throw ParseError(std::string("decomposition table: ") + err.what(), 0);
    }
}

long cx_equivalent_cost(const Census &census,
                        const DecompositionTable &table) {
    long total = 0;
    for (const auto &[name, count] : census) {
        const auto it = table.find(name);
        if (it == table.end())
            throw Error("decomposition table has no entry for gate class " +
                        name);
        total += static_cast<long>(count) * it->second;
    }
    return total;
}

long cx_equivalent_cost(const Circuit &c, const DecompositionTable &table) {
    return cx_equivalent_cost(census(c), table);
}

Eigen::MatrixXcd local_matrix(const Gate &g) {
    using Eigen::MatrixXcd;
    const Complex i1{0.0, 1.0};
    const double t = g.param;
    MatrixXcd m;
    switch (g.kind) {
    case GateKind::X:
        m = MatrixXcd::Zero(2, 2);
        m(0, 1) = m(1, 0) = 1.0;
        break;
    case GateKind::H:
        m = MatrixXcd::Constant(2, 2, 1.0 / std::sqrt(2.0));
        m(1, 1) *= -1.0;
        break;
    case GateKind::Ph:
        m = MatrixXcd::Identity(2, 2);
        m(1, 1) = std::exp(i1 * t);
        break;
    case GateKind::Rx:
        m.resize(2, 2);
        m << std::cos(t / 2), -i1 * std::sin(t / 2), -i1 * std::sin(t / 2),
            std::cos(t / 2);
        break;
    case GateKind::Ry:
        m.resize(2, 2);
        m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2),
            std::cos(t / 2);
        break;
    case GateKind::Rz:
        m = MatrixXcd::Zero(2, 2);
        m(0, 0) = std::exp(-i1 * t / 2.0);
        m(1, 1) = std::exp(i1 * t / 2.0);
        break;
    case GateKind::RXY:
        // (XX + YY)/2 swaps |01> and |10> and annihilates |00>, |11>.
        m = MatrixXcd::Identity(4, 4);
        m(1, 1) = m(2, 2) = std::cos(t / 2);
        m(1, 2) = m(2, 1) = -i1 * std::sin(t / 2);
        break;
    case GateKind::PauliRot: {
        MatrixXcd p = MatrixXcd::Identity(1, 1);
        for (char c : g.pauli) {
            MatrixXcd s(2, 2);
            switch (c) {
            case 'I':
                s << 1, 0, 0, 1;
                break;
            case 'X':
                s << 0, 1, 1, 0;
                break;
            case 'Y':
                s << 0, -i1, i1, 0;
                break;
            default:
                s << 1, 0, 0, -1;
            }
            MatrixXcd next(p.rows() * 2, p.cols() * 2);
            for (Eigen::Index r = 0; r < p.rows(); ++r)
                for (Eigen::Index c2 = 0; c2 < p.cols(); ++c2)
                    next.block(2 * r, 2 * c2, 2, 2) = p(r, c2) * s;
            p = std::move(next);
        }
        m = std::cos(t / 2) * MatrixXcd::Identity(p.rows(), p.cols()) -
            i1 * std::sin(t / 2) * p;
        break;
    }
    }
    return m;
}

Eigen::MatrixXcd unitary(const Circuit &c, int max_qubits) {
    const int n = c.num_qubits();
    if (n > max_qubits)
        throw SizeLimitError("dense unitary of " + std::to_string(n) +
                             " qubits exceeds the cap of " +
                             std::to_string(max_qubits));
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    auto bit = [n](Eigen::Index index, int q) {
        return static_cast<int>((index >> (n - 1 - q)) & 1);
    };
    for (const auto &g : c.gates()) {
        const Eigen::MatrixXcd loc = local_matrix(g);
        const int nt = static_cast<int>(g.targets.size());
        Eigen::Index target_mask = 0;
        for (int q : g.targets)
            target_mask |= Eigen::Index{1} << (n - 1 - q);
        // Full matrix of the gate, row by row over output basis states.
        Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
        for (Eigen::Index col = 0; col < dim; ++col) {
            bool active = true;
            for (std::size_t i = 0; i < g.controls.size(); ++i)
                if (bit(col, g.controls[i]) != g.pattern[i] - '0')
                    active = false;
            if (!active) {
                full(col, col) = 1.0;
                continue;
            }
            int local_col = 0;
            for (int q : g.targets)
                local_col = (local_col << 1) | bit(col, q);
            for (int local_row = 0; local_row < (1 << nt); ++local_row) {
                Eigen::Index row = col & ~target_mask;
                for (int j = 0; j < nt; ++j)
                    if ((local_row >> (nt - 1 - j)) & 1)
                        row |= Eigen::Index{1} << (n - 1 - g.targets[j]);
                full(row, col) = loc(local_row, local_col);
            }
        }
        u = full * u;
    }
    return u;
}

std::string to_json(const Circuit &c) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &g : c.gates()) {
        nlohmann::ordered_json j;
        j["gate"] = kind_name(g.kind);
        j["qubits"] = g.targets;
        j["controls"] = g.controls;
        j["pattern"] = g.pattern;
        j["param"] = g.param;
        if (g.kind == GateKind::PauliRot)
            j["pauli"] = g.pauli;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

Circuit circuit_from_json(const std::string &text, int num_qubits) {
    Circuit c(num_qubits);
    try {
        for (const auto &j : nlohmann::json::parse(text)) {
            Gate g;
            g.kind = kind_from_name(j.at("gate").get<std::string>());
            g.targets = j.at("qubits").get<std::vector<int>>();
            g.controls = j.value("controls", std::vector<int>{});
            g.pattern = j.value("pattern", std::string(g.controls.size(), '1'));
            g.param = j.value("param", 0.0);
            g.pauli = j.value("pauli", std::string{});
            c.append(std::move(g));
        }
    } catch (const nlohmann::json::exception &err) {
        throw ParseError(std::string("circuit: ") + err.what(), 0);
    }
    return c;
}

} // namespace maxkcut
