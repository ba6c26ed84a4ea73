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

#include "maxkcut/ansatz.hpp"
#include "maxkcut/circuit.hpp"
#include "maxkcut/coloring.hpp"
#include "maxkcut/graph.hpp"
#include "maxkcut/statevector.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace maxkcut {

enum class Encoding { FullLessThan, FullBalanced, Subspace };
enum class MixerKind { X, LX, Grover, GroverBox };

[[nodiscard]] std::string to_string(Encoding e);
[[nodiscard]] std::string to_string(MixerKind m);
/// Accepts "full_lt", "full-lt", "full_bal", "full-bal", "subspace".
[[nodiscard]] Encoding parse_encoding(const std::string &s);
/// Accepts "x", "lx", "grover", "grover_box", "grover-box".
[[nodiscard]] MixerKind parse_mixer(const std::string &s);

struct AnsatzConfig {
    Graph graph;
    int k = 2;
    Encoding encoding = Encoding::FullLessThan;
    MixerKind mixer = MixerKind::X;
    int depth = 1;
};

/// Throws InvalidArgument when k, depth or the encoding/mixer pair is not
/// supported.
void check_compatible(int k, Encoding e, MixerKind m);
void check_config(const AnsatzConfig &cfg);

/// Relation used to turn register labels into colours when measuring.
[[nodiscard]] ColorRelation decoding_relation(int k, Encoding e);

/// Relation whose equal pairs pick up the separator phase.
[[nodiscard]] ColorRelation separator_relation(int k, Encoding e);

[[nodiscard]] RelationVariant separator_variant(int k, Encoding e);

/// Single-vertex preparation of the start state.
[[nodiscard]] Circuit block_preparation(int k, Encoding e);

enum class Realization { Fast, Gates };

struct EngineOptions {
    int max_qubits = kDefaultMaxQubits;
    /// Gates builds every layer from the circuit IR; Fast uses a diagonal
    /// phase table and fused per-vertex mixer matrices.
    Realization realization = Realization::Fast;
    /// Expectation from this many samples when positive.
    int shots = 0;
    std::uint64_t seed = 0;
};

struct Evaluation {
    double expectation = 0.0;
    double alpha = 0.0;
};

class Ansatz {
  public:
    explicit Ansatz(AnsatzConfig cfg, EngineOptions opts = {});

    [[nodiscard]] const AnsatzConfig &config() const noexcept { return cfg_; }
    [[nodiscard]] int num_qubits() const noexcept { return n_; }
    [[nodiscard]] int qubits_per_vertex() const noexcept { return n_k_; }
    [[nodiscard]] double optimum() const noexcept { return optimum_; }

    /// gammas and betas must both have length depth.
    [[nodiscard]] Statevector state(const std::vector<double> &gammas,
                                    const std::vector<double> &betas) const;
    [[nodiscard]] Evaluation evaluate(const std::vector<double> &gammas,
                                      const std::vector<double> &betas) const;

    /// Probability mass on labels >= k for subspace runs, 0 otherwise.
    [[nodiscard]] double infeasible_mass(const Statevector &s) const;

    /// Whole circuit for the given angles.
    [[nodiscard]] Circuit circuit(const std::vector<double> &gammas,
                                  const std::vector<double> &betas) const;

  private:
    // Fast path state: one radix-r digit per vertex, vertex 0 most
    // significant. r = 2^{n_k} for full encodings and r = k for the
    // subspace encoding, which then only stores feasible labels.
    [[nodiscard]] std::vector<Complex>
    evolve(const std::vector<double> &gammas,
           const std::vector<double> &betas) const;
    void apply_separator(std::vector<Complex> &v, double gamma) const;
    void apply_mixer(std::vector<Complex> &v, double beta) const;
    [[nodiscard]] Statevector embed(const std::vector<Complex> &v) const;
    [[nodiscard]] Statevector gate_state(const std::vector<double> &gammas,
                                         const std::vector<double> &betas) const;
    [[nodiscard]] Circuit separator_layer(double gamma) const;
    [[nodiscard]] Circuit mixer_layer(double beta) const;
    [[nodiscard]] Circuit mixer_block(double beta) const;
    [[nodiscard]] double cost_of_index(std::uint64_t index) const;

    AnsatzConfig cfg_;
    EngineOptions opts_;
    int n_k_ = 0;
    int n_ = 0;
    int radix_ = 0;
    double optimum_ = 0.0;
    Circuit block_prep_;
    std::vector<Complex> initial_;
    std::vector<double> cost_;
    std::vector<double> phase_values_;
    std::vector<std::uint32_t> phase_index_;
};

struct LandscapePoint {
    double gamma;
    double beta;
    double alpha;
};

struct GridSpec {
    double gamma_min = 0.0;
    double gamma_max = 0.0; ///< 0 picks the default range
    double beta_min = 0.0;
    double beta_max = 0.0;  ///< 0 picks the default range
    int gamma_points = 32;
    int beta_points = 32;
};

/// 2 pi for every mixer except X, which has period pi.
[[nodiscard]] double default_beta_range(MixerKind m);

/// Half-open grid [min, max) in both directions, gamma-major order.
[[nodiscard]] std::vector<LandscapePoint>
landscape(const Ansatz &ansatz, GridSpec grid, int threads = 1);

void write_landscape_csv(std::ostream &os,
                         const std::vector<LandscapePoint> &points);

struct NelderMeadOptions {
    double tolerance = 1e-6;
    int max_iterations = 500;
    int max_evaluations = 0; ///< 0 means unlimited
    double initial_step = 0.1;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
};

/// Minimizes f.
[[nodiscard]] NelderMeadResult
nelder_mead(const std::function<double(const std::vector<double> &)> &f,
            std::vector<double> x0, NelderMeadOptions opts = {});

struct OptimizeOptions {
    GridSpec grid;
    NelderMeadOptions refine;
    int threads = 1;
    std::uint64_t seed = 0;
};

struct RunRecord {
    int k = 0;
    Encoding encoding = Encoding::FullLessThan;
    MixerKind mixer = MixerKind::X;
    int depth = 0;
    int num_vertices = 0;
    int num_edges = 0;
    int num_qubits = 0;
    std::vector<double> gammas;
    std::vector<double> betas;
    double expectation = 0.0;
    double alpha = 0.0;
    double optimum = 0.0;
    double wall_seconds = 0.0;
    int evaluations = 0;
    std::uint64_t seed = 0;
};

[[nodiscard]] std::string to_json(const RunRecord &r);
[[nodiscard]] RunRecord run_record_from_json(const std::string &text);

/// Linear interpolation of a length-p schedule to length p+1.
[[nodiscard]] std::vector<double> interpolate(const std::vector<double> &v);

/// Depths 1..p_max; the p=1 run uses the grid then simplex refinement,
/// deeper runs start from the interpolated and the zero-padded previous
/// optimum and refine the better one.
[[nodiscard]] std::vector<RunRecord>
optimize_schedule(const AnsatzConfig &cfg, int p_max,
                  const OptimizeOptions &opts = {},
                  const EngineOptions &engine = {});

/// Runs the schedule up to cfg.depth and returns the last record.
[[nodiscard]] RunRecord optimize(const AnsatzConfig &cfg,
                                 const OptimizeOptions &opts = {},
                                 const EngineOptions &engine = {});

struct ResourceReport {
    int k = 0;
    Encoding encoding = Encoding::FullLessThan;
    MixerKind mixer = MixerKind::X;
    int num_vertices = 0;
    int num_edges = 0;
    bool separator_available = false;
    Census separator_per_edge;
    long separator_cx = 0;
    Census mixer_per_vertex; ///< empty for the global Grover mixer
    Census mixer_global;     ///< global Grover mixer on all vertices
    long mixer_cx = 0;
    Census preparation_per_vertex;
    long preparation_cx = 0;
    long layer_cx = 0; ///< separator_cx |E| + mixer term
    std::string formula;
    std::string prior_work; ///< empty when k is a power of two
};

[[nodiscard]] ResourceReport resource_report(int k, Encoding e, MixerKind m,
                                             int num_vertices,
                                             int num_edges);

/// "1C^{n_k-1}Ph, a(a-1)(4C^{n_k}X, 1C2Ph), 2n_kCX" with a = 2^{n_k}-(k-1).
[[nodiscard]] std::string prior_work_census(int k);

[[nodiscard]] std::string to_json(const ResourceReport &r);
[[nodiscard]] std::string to_text(const ResourceReport &r);

} // namespace maxkcut
