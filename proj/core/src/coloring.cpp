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
#include "maxkcut/coloring.hpp"

#include "maxkcut/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

namespace maxkcut {

int qubits_per_color(int k) {
    if (k < 2)
        throw InvalidArgument("k must be >= 2");
    return std::bit_width(static_cast<unsigned>(k - 1));
}

bool is_power_of_two(int k) {
    return k > 0 && std::has_single_bit(static_cast<unsigned>(k));
}

Partition closure(const std::vector<std::pair<int, int>> &pairs,
                  int domain_size) {
    if (domain_size < 1)
        throw InvalidArgument("domain must be nonempty");
    std::vector<int> parent(domain_size);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= domain_size || j >= domain_size)
            throw InvalidArgument("pair (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") outside domain of " +
                                  std::to_string(domain_size));
        const int a = find(i);
        const int b = find(j);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    // Roots are the smallest members, so iterating labels in order yields
    // classes sorted by smallest member with sorted contents.
    std::map<int, std::vector<int>> by_root;
    for (int x = 0; x < domain_size; ++x)
        by_root[find(x)].push_back(x);
    Partition out;
    for (auto &[root, members] : by_root)
        out.push_back(std::move(members));
    return out;
}

ColorRelation::ColorRelation(int k, Partition classes)
    : k_(k), n_k_(qubits_per_color(k)), classes_(std::move(classes)) {
    const int size = 1 << n_k_;
    if (static_cast<int>(classes_.size()) != k)
        throw InvalidArgument("relation for k=" + std::to_string(k) + " has " +
                              std::to_string(classes_.size()) + " classes");
    for (auto &c : classes_) {
        if (c.empty())
            throw InvalidArgument("empty colour class");
        std::sort(c.begin(), c.end());
    }
    std::sort(classes_.begin(), classes_.end());
    color_.assign(size, -1);
    for (std::size_t ci = 0; ci < classes_.size(); ++ci)
        for (int label : classes_[ci]) {
            if (label < 0 || label >= size)
                throw InvalidArgument("label " + std::to_string(label) +
                                      " outside 0.." +
                                      std::to_string(size - 1));
            if (color_[label] != -1)
                throw InvalidArgument("label " + std::to_string(label) +
                                      " appears in two classes");
            color_[label] = static_cast<int>(ci);
        }
    if (std::find(color_.begin(), color_.end(), -1) != color_.end())
        throw InvalidArgument("classes do not cover all labels");
}

std::string ColorRelation::to_json() const {
    nlohmann::ordered_json j;
    j["k"] = k_;
    j["classes"] = classes_;
    return j.dump();
}

ColorRelation ColorRelation::from_json(const std::string &text) {
    try {
        const auto j = nlohmann::json::parse(text);
        return ColorRelation(j.at("k").get<int>(),
                             j.at("classes").get<Partition>());
    } catch (const nlohmann::json::exception &err) {
        throw ParseError(err.what(), 0);
    }
}

ColorRelation clr_less_than_k(int k) {
    const int size = 1 << qubits_per_color(k);
    std::vector<std::pair<int, int>> pairs;
    for (int i = k - 1; i + 1 < size; ++i)
        pairs.emplace_back(i, i + 1);
    return ColorRelation(k, closure(pairs, size));
}

ColorRelation clr_balanced(int k) {
    const int size = 1 << qubits_per_color(k);
    std::vector<std::pair<int, int>> pairs;
    switch (k) {
    case 3:
        pairs = {{2, 3}};
        break;
    case 5:
        pairs = {{0, 1}, {4, 5}, {6, 7}};
        break;
    case 6:
        pairs = {{0, 1}, {4, 5}};
        break;
    case 7:
        pairs = {{6, 7}};
        break;
    default:
        for (int first = size - 2 * (size - k); first < size; first += 2)
            pairs.emplace_back(first, first + 1);
    }
    return ColorRelation(k, closure(pairs, size));
}

ColorRelation clr_trivial(int num_qubits) {
    return ColorRelation(1 << num_qubits, closure({}, 1 << num_qubits));
}

Assignment decode_index(std::uint64_t index, const ColorRelation &rel,
                        int num_vertices) {
    const int nk = rel.num_qubits();
    const std::uint64_t mask = (std::uint64_t{1} << nk) - 1;
    Assignment a{std::vector<int>(num_vertices)};
    for (int v = 0; v < num_vertices; ++v) {
        const int shift = (num_vertices - 1 - v) * nk;
        a.colors[v] = rel.color_of(static_cast<int>((index >> shift) & mask));
    }
    return a;
}

Assignment decode(std::string_view bits, const ColorRelation &rel,
                  int num_vertices) {
    const auto expected =
        static_cast<std::size_t>(num_vertices) * rel.num_qubits();
    if (bits.size() != expected)
        throw InvalidArgument("bitstring has length " +
                              std::to_string(bits.size()) + ", expected " +
                              std::to_string(expected));
    if (expected > 63)
        throw SizeLimitError("bitstring longer than 63 bits");
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw InvalidArgument("bitstring must contain only 0 and 1");
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return decode_index(index, rel, num_vertices);
}

} // namespace maxkcut
