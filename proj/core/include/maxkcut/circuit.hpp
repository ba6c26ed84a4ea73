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

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace maxkcut {

using Complex = std::complex<double>;

enum class GateKind { X, H, Ph, Rx, Ry, Rz, RXY, PauliRot };

/**
 * One (possibly multi-controlled) gate.
 *
 * The action follows C^c_b U_t = (I - |b><b|_c) (x) I_t + |b><b|_c (x) U_t:
 * U acts on the targets only when control qubit controls[i] holds
 * pattern[i] ('1' closed, '0' open). Conventions for U:
 *   Ph(t)  = diag(1, e^{it})
 *   Rx/Ry/Rz(t) = exp(-i t/2 P)
 *   RXY(t) = exp(-i t/4 (XX + YY)) on two targets
 *   PauliRot(t) = exp(-i t/2 P) for the Pauli string in pauli, whose i-th
 *   letter acts on targets[i].
 */
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> targets;
    std::vector<int> controls;
    std::string pattern;
    double param = 0.0;
    std::string pauli;

    [[nodiscard]] int num_controls() const noexcept {
        return static_cast<int>(controls.size());
    }
    /// Adjoint gate (negated angle; X and H are self-inverse).
    [[nodiscard]] Gate inverse() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

namespace gates {

Gate x(int q);
Gate h(int q);
Gate ph(int q, double t);
Gate rx(int q, double t);
Gate ry(int q, double t);
Gate rz(int q, double t);
Gate rxy(int a, int b, double t);
Gate pauli_rot(const std::string &pauli, std::vector<int> qubits,
               double theta);
Gate cx(int control, int target);
/// Adds controls (pattern defaults to all closed) to any gate.
Gate controlled(Gate g, std::vector<int> controls, std::string pattern = {});

} // namespace gates

/// Ordered gate list over num_qubits qubits; qubit 0 is the most
/// significant bit of a basis index.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int num_qubits);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

    /// Validates indices, pattern length and Pauli letters.
    Circuit &append(Gate g);
    /// Appends other with every qubit index shifted by offset.
    Circuit &append(const Circuit &other, int offset = 0);
    /// Appends other with qubit q mapped to qubit_map[q].
    Circuit &append_mapped(const Circuit &other,
                           const std::vector<int> &qubit_map);

    [[nodiscard]] Circuit inverse() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    int num_qubits_ = 0;
    std::vector<Gate> gates_;
};

/// Gate class name keyed by kind and control count: "CX", "C2X", "Ph",
/// "CPh", "C3Ph", "Ry", "CH", "RXY", "Pauli2" (PauliRot of weight 2), ...
[[nodiscard]] std::string gate_class(const Gate &g);

using Census = std::map<std::string, int>;

/// Gate counts per class. Uncontrolled X gates are basis relabelings
/// and are left out unless include_bare_x is set.
[[nodiscard]] Census census(const Circuit &c, bool include_bare_x = false);

/// Renders counts as "1CPh, 1C²Ph, 2CX": phase classes by ascending
/// control count, then X classes by descending control count, then the
/// rest alphabetically.
[[nodiscard]] std::string format_census(const Census &census);

/// CX count charged per gate class.
using DecompositionTable = std::map<std::string, int>;

/**
 * Textbook decompositions: CX=1, C2X=6, CPh=2, C2Ph=8, C3Ph=20, C4Ph=44,
 * CH=1, CRy=2, RXY=2, PauliRot of weight w costs 2(w-1), uncontrolled
 * single-qubit gates cost 0.
 */
[[nodiscard]] DecompositionTable default_decomposition_table();
[[nodiscard]] DecompositionTable
decomposition_table_from_json(const std::string &text);

/// Sum of census counts times table entries. Throws Error naming the
/// first gate class missing from the table.
[[nodiscard]] long cx_equivalent_cost(const Circuit &c,
                                      const DecompositionTable &table);
[[nodiscard]] long cx_equivalent_cost(const Census &census,
                                      const DecompositionTable &table);

/// 2^t x 2^t matrix of the uncontrolled gate on its targets, first target
/// most significant.
[[nodiscard]] Eigen::MatrixXcd local_matrix(const Gate &g);

/// Dense unitary of the whole circuit (gates applied in list order), built
/// by embedding each local matrix. Throws SizeLimitError above max_qubits.
[[nodiscard]] Eigen::MatrixXcd unitary(const Circuit &c, int max_qubits = 12);

[[nodiscard]] std::string to_json(const Circuit &c);
[[nodiscard]] Circuit circuit_from_json(const std::string &text,
                                        int num_qubits);

} // namespace maxkcut
