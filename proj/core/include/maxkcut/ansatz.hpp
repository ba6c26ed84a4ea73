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

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace maxkcut {

/// Which colour relation the phase separator realises.
enum class RelationVariant { Trivial, LessThan, Balanced };

[[nodiscard]] std::string to_string(RelationVariant v);

/// Trivial for a power of two; otherwise clr_less_than_k / clr_balanced.
[[nodiscard]] ColorRelation relation_for(int k, RelationVariant v);

// ---------------------------------------------------------------------------
// Phase separators. All act on two registers of n_k qubits (vertex i on
// qubits 0..n_k-1, vertex j on n_k..2n_k-1) and apply e^{it} to |a>|b>
// exactly when the labels a and b are equivalent.
// ---------------------------------------------------------------------------

/// CX ladder i -> i+n_k, a zero-controlled Ph(t) on the second register,
/// then the ladder in reverse: 2 n_k CX and one C^{n_k-1}Ph.
[[nodiscard]] Circuit phase_separator_power2(int n_k, double t);

/// clr_< for k = 2^l + 1 on 2(l+1) qubits: a ladder that skips the leading
/// qubit plus one C^{l+1}Ph for the first 2^l labels, and a single CPh for
/// the merged top half.
[[nodiscard]] Circuit phase_separator_2l_plus1(int l, double t);

/**
 * Hand-built circuits for k in {3, 5, 6, 7}.
 *
 * k=3 and k=5 (LessThan) are phase_separator_2l_plus1. k=5 Balanced splits
 * the projector into three X-orbit pieces with the back-to-back CX(0,3)
 * pair removed; k=6 Balanced keeps the first two pieces; k=7 keeps the
 * first and third with the adjacent CX(2,5) pair removed. k=6 LessThan
 * uses a Toffoli basis change for the part that is not an X orbit.
 * For k=3 and k=7 both relations coincide.
 */
[[nodiscard]] Circuit phase_separator_k(int k, RelationVariant v, double t);

/// True when phase_separator_circuit() has a construction for (k, v).
[[nodiscard]] bool has_separator_circuit(int k, RelationVariant v);

/// Dispatches to the power-of-two, hand-built or 2^l+1 construction.
/// Throws InvalidArgument for unsupported pairs.
[[nodiscard]] Circuit phase_separator_circuit(int k, RelationVariant v,
                                              double t);

/// Diagonal of e^{it P_B} over the 2^{2 n_k} two-register basis states,
/// index = (a << n_k) | b.
[[nodiscard]] std::vector<Complex>
phase_separator_oracle(const ColorRelation &rel, double t);

// ---------------------------------------------------------------------------
// Initial states
// ---------------------------------------------------------------------------

/// H on every qubit.
[[nodiscard]] Circuit prepare_plus(int n);

/// Uniform superposition of labels 0..k-1 on n_k qubits for k in
/// {3, 5, 6, 7}. With phase_correction the amplitudes come out real
/// positive; without it the RXY gate leaves a -i on some labels.
[[nodiscard]] Circuit prepare_subspace(int k, bool phase_correction = true);

// ---------------------------------------------------------------------------
// Mixers (U_M(beta) = exp(-i beta H_M))
// ---------------------------------------------------------------------------

/// Rx(2 beta) on every qubit.
[[nodiscard]] Circuit mixer_x(int n, double beta);

/// One LX term X<S_1,...,S_g>: an X-type string and its +Z stabiliser
/// generators, written qubit 0 first ("XII", {"IZI"}).
struct LxTerm {
    std::string x_part;
    std::vector<std::string> generators;
};

/// Per-vertex LX terms for k in {3, 5, 6, 7}, in application order.
[[nodiscard]] const std::vector<LxTerm> &lx_terms(int k);

/// Product over lx_terms(k) of exp(-i beta X<S...>). Each term expands into
/// 2^g commuting Pauli strings rotated by 2 beta / 2^g, so the product is
/// exact per term.
[[nodiscard]] Circuit mixer_lx(int k, double beta);

enum class GroverScope { Global, PerVertex };

/// prep^dagger, a phase e^{-i beta} on |0...0>, prep: equals
/// I - (1 - e^{-i beta})|F><F| with |F> = prep|0>.
[[nodiscard]] Circuit mixer_grover(const Circuit &prep, double beta);

/// Global: the Grover mixer of prep replicated on num_blocks registers.
/// PerVertex: an independent Grover mixer per register (Grover box).
[[nodiscard]] Circuit mixer_grover(const Circuit &block_prep, double beta,
                                   GroverScope scope, int num_blocks);

/// G (x) I + I (x) H.
[[nodiscard]] Eigen::MatrixXcd box_product(const Eigen::MatrixXcd &g,
                                           const Eigen::MatrixXcd &h);

struct MixerReport {
    bool preserves = false;
    double max_leakage = 0.0;
    bool connected = false;
    /// Pairs (x, y), x < y, with |<x|U(beta)|y>| > 1e-8 for some sampled
    /// beta at r = 1.
    std::set<std::pair<int, int>> direct_transitions;
    std::string detail;

    [[nodiscard]] bool valid() const { return preserves && connected; }
};

/**
 * Checks that a per-vertex mixer keeps span(feasible) invariant (leaked
 * norm below 1e-10 for every sampled beta) and that powers U(beta)^r,
 * r <= |feasible|, connect all feasible states.
 */
[[nodiscard]] MixerReport
validate_mixer(const std::function<Circuit(double)> &mixer,
               const std::vector<int> &feasible,
               const std::vector<double> &betas = {0.13, 0.5, 0.9, 1.37,
                                                   2.2, 3.0});

} // namespace maxkcut
