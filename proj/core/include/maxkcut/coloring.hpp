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

#include "maxkcut/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maxkcut {

/// Number of qubits per vertex: ceil(log2 k).
[[nodiscard]] int qubits_per_color(int k);

[[nodiscard]] bool is_power_of_two(int k);

/// Partition of {0, ..., domain_size-1}, classes sorted by smallest member.
using Partition = std::vector<std::vector<int>>;

/// Smallest equivalence relation containing the given pairs.
[[nodiscard]] Partition closure(const std::vector<std::pair<int, int>> &pairs,
                                int domain_size);

/**
 * An equivalence relation on the 2^n_k binary labels of one vertex whose
 * classes are the k colours.
 *
 * Colour indices follow the class order (ascending smallest member), so
 * color_of(label) is the position of the label's class in classes().
 */
class ColorRelation {
  public:
    ColorRelation(int k, Partition classes);

    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] int num_qubits() const noexcept { return n_k_; }
    [[nodiscard]] int domain_size() const noexcept { return 1 << n_k_; }
    [[nodiscard]] const Partition &classes() const noexcept {
        return classes_;
    }
    [[nodiscard]] int color_of(int label) const { return color_.at(label); }
    [[nodiscard]] int representative(int label) const {
        return classes_[color_.at(label)].front();
    }
    [[nodiscard]] bool equivalent(int a, int b) const {
        return color_.at(a) == color_.at(b);
    }

    /// {"k": k, "classes": [[...], ...]}
    [[nodiscard]] std::string to_json() const;
    [[nodiscard]] static ColorRelation from_json(const std::string &text);

    friend bool operator==(const ColorRelation &a, const ColorRelation &b) {
        return a.k_ == b.k_ && a.classes_ == b.classes_;
    }

  private:
    int k_;
    int n_k_;
    Partition classes_;
    std::vector<int> color_;
};

/// Labels k-1, ..., 2^n_k - 1 share the last colour; the others are
/// singletons. For a power of two this is the identity relation.
[[nodiscard]] ColorRelation clr_less_than_k(int k);

/**
 * A relation whose classes have at most two members.
 *
 * k = 3, 5, 6, 7 use the pairings {2,3}; {0,1},{4,5},{6,7}; {0,1},{4,5};
 * {6,7}. Any other k pairs the highest 2(2^n_k - k) labels as {2i, 2i+1},
 * which is one valid choice among several.
 */
[[nodiscard]] ColorRelation clr_balanced(int k);

/// The identity relation on 2^n labels (k = 2^n colours).
[[nodiscard]] ColorRelation clr_trivial(int num_qubits);

/// Decodes a '0'/'1' string of length num_vertices * n_k. Within a vertex
/// block the first character is the most significant bit of the label.
[[nodiscard]] Assignment decode(std::string_view bits,
                                const ColorRelation &rel, int num_vertices);

/// Same as decode() for a basis index whose most significant of the
/// num_vertices * n_k bits belongs to vertex 0.
[[nodiscard]] Assignment decode_index(std::uint64_t index,
                                      const ColorRelation &rel,
                                      int num_vertices);

} // namespace maxkcut
