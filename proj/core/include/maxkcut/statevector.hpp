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

#include "maxkcut/circuit.hpp"
#include "maxkcut/coloring.hpp"
#include "maxkcut/graph.hpp"

#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace maxkcut {

/// Default cap on the simulated register (2^26 amplitudes, 1 GiB).
inline constexpr int kDefaultMaxQubits = 26;

/// Real diagonal of an observable in the computational basis.
using DiagonalObservable = std::vector<double>;

/**
 * Dense state of n qubits. Basis index bit (n-1-q) holds qubit q, so qubit
 * 0 is the most significant bit.
 */
class Statevector {
  public:
    /// |0...0>.
    explicit Statevector(int num_qubits, int max_qubits = kDefaultMaxQubits);
    /// Takes ownership of amplitudes; the size must be a power of two.
    explicit Statevector(std::vector<Complex> amplitudes);

    [[nodiscard]] int num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return amps_.size();
    }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm_squared() const;

    void apply(const Gate &g);
    void apply(const Circuit &c);

    /// Applies a 2^t x 2^t matrix to the listed qubits (first qubit most
    /// significant in the local index). Used for fused per-vertex layers.
    void apply_matrix(std::span<const int> qubits, const Eigen::MatrixXcd &m);

    /// amp[x] *= phases[x].
    void apply_diagonal(std::span<const Complex> phases);

    /// Little-endian (re, im) float64 pairs, index order.
    void dump(const std::filesystem::path &path) const;

  private:
    int n_;
    std::vector<Complex> amps_;
};

/// Entry x is the cut value of decode_index(x, rel) on g.
[[nodiscard]] DiagonalObservable cost_diagonal(const Graph &g,
                                               const ColorRelation &rel,
                                               int max_qubits =
                                                   kDefaultMaxQubits);

/// sum_x |amp_x|^2 diag_x.
[[nodiscard]] double expectation(const Statevector &state,
                                 std::span<const double> diag);

/// Outcome counts keyed by the n-character bitstring (qubit 0 first).
[[nodiscard]] std::map<std::string, int> sample(const Statevector &state,
                                                int shots, std::uint64_t seed);

/// n-character bitstring of a basis index, qubit 0 first.
[[nodiscard]] std::string to_bitstring(std::uint64_t index, int num_qubits);

} // namespace maxkcut
