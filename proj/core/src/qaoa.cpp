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

#include "maxkcut/qaoa.hpp"

#include "maxkcut/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <numeric>
#include <thread>

namespace maxkcut {

namespace {

using json = nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::vector<double> round12(const std::vector<double> &v) {
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(),
                   [](double x) { return round12(x); });
    return out;
}

std::string class_name(const std::string &base, int controls) {
    if (controls == 0)
        return base;
    if (controls == 1)
        return "C" + base;
    return "C" + std::to_string(controls) + base;
}

// Plain complex product without the C99 Annex G special-value handling.
inline Complex mul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

bool is_full(Encoding e) { return e != Encoding::Subspace; }

bool has_lx(int k) { return k == 3 || k == 5 || k == 6 || k == 7; }

} // namespace

std::string to_string(Encoding e) {
    switch (e) {
    case Encoding::FullLessThan:
        return "full_lt";
    case Encoding::FullBalanced:
        return "full_bal";
    case Encoding::Subspace:
        return "subspace";
    }
    return "?";
}

std::string to_string(MixerKind m) {
    switch (m) {
    case MixerKind::X:
        return "x";
    case MixerKind::LX:
        return "lx";
    case MixerKind::Grover:
        return "grover";
    case MixerKind::GroverBox:
        return "grover_box";
    }
    return "?";
}

Encoding parse_encoding(const std::string &s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), '-', '_');
    if (t == "full_lt")
        return Encoding::FullLessThan;
    if (t == "full_bal")
        return Encoding::FullBalanced;
    if (t == "subspace")
        return Encoding::Subspace;
    throw InvalidArgument("unknown encoding '" + s + "'");
}

MixerKind parse_mixer(const std::string &s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), '-', '_');
    if (t == "x")
        return MixerKind::X;
    if (t == "lx")
        return MixerKind::LX;
    if (t == "grover")
        return MixerKind::Grover;
    if (t == "grover_box")
        return MixerKind::GroverBox;
    throw InvalidArgument("unknown mixer '" + s + "'");
}

void check_compatible(int k, Encoding e, MixerKind m) {
    if (k < 2)
        throw InvalidArgument("k must be at least 2, got " + std::to_string(k));
    if (m == MixerKind::X && !is_full(e))
        throw InvalidArgument("the X mixer needs a full encoding");
    if (m == MixerKind::LX) {
        if (is_full(e))
            throw InvalidArgument("the LX mixer needs the subspace encoding");
        if (!has_lx(k))
            throw InvalidArgument("no LX mixer for k=" + std::to_string(k));
    }
}

void check_config(const AnsatzConfig &cfg) {
    check_compatible(cfg.k, cfg.encoding, cfg.mixer);
    if (cfg.depth < 1)
        throw InvalidArgument("depth must be at least 1");
}

ColorRelation decoding_relation(int k, Encoding e) {
    if (e == Encoding::FullBalanced)
        return clr_balanced(k);
    return clr_less_than_k(k);
}

ColorRelation separator_relation(int k, Encoding e) {
    switch (e) {
    case Encoding::FullLessThan:
        return clr_less_than_k(k);
    case Encoding::FullBalanced:
        return clr_balanced(k);
    case Encoding::Subspace:
        break;
    }
    return clr_trivial(qubits_per_color(k));
}

RelationVariant separator_variant(int k, Encoding e) {
    if (e == Encoding::Subspace || is_power_of_two(k))
        return RelationVariant::Trivial;
    return e == Encoding::FullBalanced ? RelationVariant::Balanced
                                       : RelationVariant::LessThan;
}

namespace {

int separator_k(int k, Encoding e) {
    return e == Encoding::Subspace ? 1 << qubits_per_color(k) : k;
}

} // namespace

Circuit block_preparation(int k, Encoding e) {
    const int n_k = qubits_per_color(k);
    if (is_full(e) || is_power_of_two(k))
        return prepare_plus(n_k);
    return prepare_subspace(k);
}

// Ansatz

Ansatz::Ansatz(AnsatzConfig cfg, EngineOptions opts)
    : cfg_(std::move(cfg)), opts_(opts) {
    check_config(cfg_);
    n_k_ = qubits_per_color(cfg_.k);
    const int nv = cfg_.graph.num_vertices();
    const long total = static_cast<long>(nv) * n_k_;
    if (total > opts_.max_qubits)
        throw SizeLimitError("this instance needs " + std::to_string(total) +
                             " qubits, the limit is " +
                             std::to_string(opts_.max_qubits));
    n_ = static_cast<int>(total);
    optimum_ = brute_force_max_kcut(cfg_.graph, cfg_.k).optimum;
    block_prep_ = block_preparation(cfg_.k, cfg_.encoding);
    radix_ = cfg_.encoding == Encoding::Subspace && !is_power_of_two(cfg_.k)
                 ? cfg_.k
                 : 1 << n_k_;
    if (opts_.realization == Realization::Gates)
        return;

    Statevector block(n_k_);
    block.apply(block_prep_);
    std::vector<Complex> local(block.amplitudes().begin(),
                               block.amplitudes().begin() + radix_);
    initial_ = {Complex{1.0}};
    for (int v = 0; v < nv; ++v) {
        std::vector<Complex> next(initial_.size() * radix_);
        for (std::size_t i = 0; i < initial_.size(); ++i)
            for (int l = 0; l < radix_; ++l)
                next[i * radix_ + l] = initial_[i] * local[l];
        initial_.swap(next);
    }

    const ColorRelation dec = decoding_relation(cfg_.k, cfg_.encoding);
    const ColorRelation sep = separator_relation(cfg_.k, cfg_.encoding);
    const std::size_t dim = initial_.size();
    cost_.resize(dim);
    std::vector<double> s_values(dim);
    std::vector<int> labels(nv);
    Assignment assignment{std::vector<int>(nv)};
    for (std::size_t x = 0; x < dim; ++x) {
        std::size_t rest = x;
        for (int v = nv - 1; v >= 0; --v) {
            labels[v] = static_cast<int>(rest % radix_);
            rest /= radix_;
        }
        for (int v = 0; v < nv; ++v)
            assignment.colors[v] = dec.color_of(labels[v]);
        cost_[x] = cost(cfg_.graph, assignment);
        double acc = 0.0;
        for (const Edge &e : cfg_.graph.edges())
            if (sep.equivalent(labels[e.u], labels[e.v]))
                acc += e.weight;
        s_values[x] = acc;
    }
    phase_values_ = s_values;
    std::sort(phase_values_.begin(), phase_values_.end());
    phase_values_.erase(std::unique(phase_values_.begin(), phase_values_.end()),
                        phase_values_.end());
    phase_index_.resize(dim);
    for (std::size_t x = 0; x < dim; ++x)
        phase_index_[x] = static_cast<std::uint32_t>(
            std::lower_bound(phase_values_.begin(), phase_values_.end(),
                             s_values[x]) -
            phase_values_.begin());
}

Circuit Ansatz::separator_layer(double gamma) const {
    const int ks = separator_k(cfg_.k, cfg_.encoding);
    const RelationVariant var = separator_variant(cfg_.k, cfg_.encoding);
    Circuit c(n_);
    std::vector<int> map(2 * n_k_);
    for (const Edge &e : cfg_.graph.edges()) {
        for (int q = 0; q < n_k_; ++q) {
            map[q] = e.u * n_k_ + q;
            map[n_k_ + q] = e.v * n_k_ + q;
        }
        c.append_mapped(phase_separator_circuit(ks, var, gamma * e.weight),
                        map);
    }
    return c;
}

Circuit Ansatz::mixer_block(double beta) const {
    switch (cfg_.mixer) {
    case MixerKind::X:
        return mixer_x(n_k_, beta);
    case MixerKind::LX:
        return mixer_lx(cfg_.k, beta);
    case MixerKind::GroverBox:
    case MixerKind::Grover:
        break;
    }
    return mixer_grover(block_prep_, beta);
}

Circuit Ansatz::mixer_layer(double beta) const {
    const int nv = cfg_.graph.num_vertices();
    if (cfg_.mixer == MixerKind::Grover)
        return mixer_grover(block_prep_, beta, GroverScope::Global, nv);
    Circuit c(n_);
    const Circuit block = mixer_block(beta);
    for (int v = 0; v < nv; ++v)
        c.append(block, v * n_k_);
    return c;
}

void Ansatz::apply_separator(std::vector<Complex> &v, double gamma) const {
    std::vector<Complex> table(phase_values_.size());
    for (std::size_t i = 0; i < table.size(); ++i)
        table[i] = std::polar(1.0, gamma * phase_values_[i]);
    for (std::size_t x = 0; x < v.size(); ++x)
        v[x] = mul(v[x], table[phase_index_[x]]);
}

namespace {

// Unnormalized Walsh-Hadamard transform.
void walsh_hadamard(std::vector<Complex> &v) {
    const std::size_t dim = v.size();
    for (std::size_t h = 1; h < dim; h <<= 1)
        for (std::size_t i = 0; i < dim; i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const Complex a = v[j];
                const Complex b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
}

} // namespace

void Ansatz::apply_mixer(std::vector<Complex> &v, double beta) const {
    if (cfg_.mixer == MixerKind::Grover) {
        // I - (1 - e^{-i beta}) |F><F| with |F> the start state.
        Complex overlap = 0.0;
        for (std::size_t x = 0; x < v.size(); ++x)
            overlap += mul(std::conj(initial_[x]), v[x]);
        const Complex f = mul(1.0 - std::polar(1.0, -beta), overlap);
        for (std::size_t x = 0; x < v.size(); ++x)
            v[x] -= mul(f, initial_[x]);
        return;
    }
    if (cfg_.mixer == MixerKind::X) {
        // e^{-i beta sum X} = H^n e^{-i beta sum Z} H^n
        std::vector<Complex> table(n_ + 1);
        const double scale = 1.0 / static_cast<double>(v.size());
        for (int w = 0; w <= n_; ++w)
            table[w] = std::polar(scale, -beta * (n_ - 2 * w));
        walsh_hadamard(v);
        for (std::size_t x = 0; x < v.size(); ++x)
            v[x] = mul(v[x], table[std::popcount(x)]);
        walsh_hadamard(v);
        return;
    }
    const Eigen::MatrixXcd full = unitary(mixer_block(beta));
    const int r = radix_;
    std::vector<Complex> m(static_cast<std::size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            m[static_cast<std::size_t>(i) * r + j] = full(i, j);
    std::vector<Complex> in(r);
    const int nv = cfg_.graph.num_vertices();
    std::size_t stride = v.size();
    for (int vert = 0; vert < nv; ++vert) {
        stride /= static_cast<std::size_t>(r);
        const std::size_t block = stride * r;
        for (std::size_t o = 0; o < v.size(); o += block) {
            for (std::size_t i = 0; i < stride; ++i) {
                const std::size_t base = o + i;
                for (int l = 0; l < r; ++l)
                    in[l] = v[base + l * stride];
                for (int l = 0; l < r; ++l) {
                    double re = 0.0, im = 0.0;
                    const Complex *row = &m[static_cast<std::size_t>(l) * r];
                    for (int c = 0; c < r; ++c) {
                        re += row[c].real() * in[c].real() -
                              row[c].imag() * in[c].imag();
                        im += row[c].real() * in[c].imag() +
                              row[c].imag() * in[c].real();
                    }
                    v[base + l * stride] = {re, im};
                }
            }
        }
    }
}

std::vector<Complex> Ansatz::evolve(const std::vector<double> &gammas,
                                    const std::vector<double> &betas) const {
    if (gammas.size() != betas.size())
        throw InvalidArgument("gamma and beta schedules differ in length");
    std::vector<Complex> v = initial_;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        apply_separator(v, gammas[i]);
        apply_mixer(v, betas[i]);
    }
    return v;
}

Statevector Ansatz::embed(const std::vector<Complex> &v) const {
    if (radix_ == 1 << n_k_)
        return Statevector(v);
    const int nv = cfg_.graph.num_vertices();
    std::vector<Complex> full(std::size_t{1} << n_);
    for (std::size_t x = 0; x < v.size(); ++x) {
        std::size_t rest = x;
        std::size_t index = 0;
        for (int vert = nv - 1; vert >= 0; --vert) {
            index |= (rest % radix_) << ((nv - 1 - vert) * n_k_);
            rest /= radix_;
        }
        full[index] = v[x];
    }
    return Statevector(std::move(full));
}

Statevector Ansatz::gate_state(const std::vector<double> &gammas,
                               const std::vector<double> &betas) const {
    if (gammas.size() != betas.size())
        throw InvalidArgument("gamma and beta schedules differ in length");
    Statevector s(n_, opts_.max_qubits);
    s.apply(circuit(gammas, betas));
    return s;
}

double Ansatz::cost_of_index(std::uint64_t index) const {
    return cost(cfg_.graph,
                decode_index(index, decoding_relation(cfg_.k, cfg_.encoding),
                             cfg_.graph.num_vertices()));
}

Statevector Ansatz::state(const std::vector<double> &gammas,
                          const std::vector<double> &betas) const {
    if (opts_.realization == Realization::Gates)
        return gate_state(gammas, betas);
    return embed(evolve(gammas, betas));
}

Evaluation Ansatz::evaluate(const std::vector<double> &gammas,
                            const std::vector<double> &betas) const {
    Evaluation out;
    if (opts_.shots > 0) {
        const auto counts = sample(state(gammas, betas), opts_.shots, opts_.seed);
        double acc = 0.0;
        for (const auto &[bits, n] : counts)
            acc += n * cost_of_index(std::stoull(bits, nullptr, 2));
        out.expectation = acc / opts_.shots;
    } else if (opts_.realization == Realization::Gates) {
        const Statevector s = gate_state(gammas, betas);
        const auto amps = s.amplitudes();
        const ColorRelation dec = decoding_relation(cfg_.k, cfg_.encoding);
        const int nv = cfg_.graph.num_vertices();
        double acc = 0.0;
        for (std::size_t x = 0; x < amps.size(); ++x) {
            const double p = std::norm(amps[x]);
            if (p > 0.0)
                acc += p * cost(cfg_.graph, decode_index(x, dec, nv));
        }
        out.expectation = acc;
    } else {
        const auto v = evolve(gammas, betas);
        double acc = 0.0;
        for (std::size_t x = 0; x < v.size(); ++x)
            acc += std::norm(v[x]) * cost_[x];
        out.expectation = acc;
    }
    out.alpha = optimum_ > 0.0 ? out.expectation / optimum_ : 1.0;
    return out;
}

double Ansatz::infeasible_mass(const Statevector &s) const {
    if (is_full(cfg_.encoding))
        return 0.0;
    const int nv = cfg_.graph.num_vertices();
    const std::uint64_t mask = (std::uint64_t{1} << n_k_) - 1;
    double mass = 0.0;
    const auto amps = s.amplitudes();
    for (std::size_t x = 0; x < amps.size(); ++x) {
        for (int v = 0; v < nv; ++v) {
            if (static_cast<int>((x >> ((nv - 1 - v) * n_k_)) & mask) >=
                cfg_.k) {
                mass += std::norm(amps[x]);
                break;
            }
        }
    }
    return mass;
}

Circuit Ansatz::circuit(const std::vector<double> &gammas,
                        const std::vector<double> &betas) const {
    if (gammas.size() != betas.size())
        throw InvalidArgument("gamma and beta schedules differ in length");
    Circuit c(n_);
    for (int v = 0; v < cfg_.graph.num_vertices(); ++v)
        c.append(block_prep_, v * n_k_);
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        c.append(separator_layer(gammas[i]));
        c.append(mixer_layer(betas[i]));
    }
    return c;
}

// Landscapes

double default_beta_range(MixerKind m) {
    return m == MixerKind::X ? std::numbers::pi : kTwoPi;
}

std::vector<LandscapePoint> landscape(const Ansatz &ansatz, GridSpec grid,
                                      int threads) {
    if (grid.gamma_points < 1 || grid.beta_points < 1)
        throw InvalidArgument("grid needs at least one point per axis");
    if (grid.gamma_max == 0.0)
        grid.gamma_max = kTwoPi;
    if (grid.beta_max == 0.0)
        grid.beta_max = default_beta_range(ansatz.config().mixer);
    const double dg = (grid.gamma_max - grid.gamma_min) / grid.gamma_points;
    const double db = (grid.beta_max - grid.beta_min) / grid.beta_points;
    const std::size_t total =
        static_cast<std::size_t>(grid.gamma_points) * grid.beta_points;
    std::vector<LandscapePoint> out(total);

    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < total; i += step) {
            const int gi = static_cast<int>(i / grid.beta_points);
            const int bi = static_cast<int>(i % grid.beta_points);
            const double g = grid.gamma_min + gi * dg;
            const double b = grid.beta_min + bi * db;
            out[i] = {g, b, ansatz.evaluate({g}, {b}).alpha};
        }
    };
    const int workers = std::max(1, threads);
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work, static_cast<std::size_t>(w),
                              static_cast<std::size_t>(workers));
    }
    return out;
}

void write_landscape_csv(std::ostream &os,
                         const std::vector<LandscapePoint> &points) {
    os << "gamma,beta,alpha\n";
    char buf[128];
    for (const auto &p : points) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", p.gamma, p.beta,
                      p.alpha);
        os << buf;
    }
}

// Nelder-Mead

NelderMeadResult
nelder_mead(const std::function<double(const std::vector<double> &)> &f,
            std::vector<double> x0, NelderMeadOptions opts) {
    const std::size_t n = x0.size();
    if (n == 0)
        throw InvalidArgument("nelder_mead needs at least one variable");
    NelderMeadResult res;
    auto eval = [&](const std::vector<double> &x) {
        ++res.evaluations;
        return f(x);
    };
    auto budget_left = [&] {
        return opts.max_evaluations <= 0 ||
               res.evaluations < opts.max_evaluations;
    };

    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> vals(n + 1);
    vals[0] = eval(x0);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i + 1][i] += opts.initial_step;
        vals[i + 1] = eval(pts[i + 1]);
    }

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return vals[a] < vals[b];
                         });
        std::vector<std::vector<double>> p2(n + 1);
        std::vector<double> v2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            p2[i] = pts[order[i]];
            v2[i] = vals[order[i]];
        }
        pts.swap(p2);
        vals.swap(v2);
    };

    auto combine = [&](const std::vector<double> &c,
                       const std::vector<double> &w, double t) {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = c[i] + t * (w[i] - c[i]);
        return out;
    };

    sort_simplex();
    while (res.iterations < opts.max_iterations && budget_left()) {
        if (vals[n] - vals[0] < opts.tolerance)
            break;
        ++res.iterations;
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                centroid[j] += pts[i][j] / static_cast<double>(n);

        const auto xr = combine(centroid, pts[n], -1.0);
        const double fr = eval(xr);
        if (fr < vals[0]) {
            const auto xe = combine(centroid, pts[n], -2.0);
            const double fe = eval(xe);
            if (fe < fr) {
                pts[n] = xe;
                vals[n] = fe;
            } else {
                pts[n] = xr;
                vals[n] = fr;
            }
        } else if (fr < vals[n - 1]) {
            pts[n] = xr;
            vals[n] = fr;
        } else {
            const bool outside = fr < vals[n];
            const auto xc = outside ? combine(centroid, pts[n], -0.5)
                                    : combine(centroid, pts[n], 0.5);
            const double fc = eval(xc);
            if (fc < std::min(fr, vals[n])) {
                pts[n] = xc;
                vals[n] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    pts[i] = combine(pts[0], pts[i], 0.5);
                    vals[i] = eval(pts[i]);
                }
            }
        }
        sort_simplex();
    }
    res.x = pts[0];
    res.value = vals[0];
    return res;
}

// Optimization

std::vector<double> interpolate(const std::vector<double> &v) {
    const std::size_t p = v.size();
    if (p == 0)
        return {0.0};
    std::vector<double> out(p + 1);
    for (std::size_t i = 0; i <= p; ++i) {
        const double prev = i > 0 ? v[i - 1] : 0.0;
        const double cur = i < p ? v[i] : 0.0;
        out[i] = (static_cast<double>(i) * prev +
                  static_cast<double>(p - i) * cur) /
                 static_cast<double>(p);
    }
    return out;
}

namespace {

RunRecord make_record(const Ansatz &a, std::vector<double> gammas,
                      std::vector<double> betas, int evaluations,
                      double seconds, std::uint64_t seed) {
    const Evaluation ev = a.evaluate(gammas, betas);
    RunRecord r;
    const auto &cfg = a.config();
    r.k = cfg.k;
    r.encoding = cfg.encoding;
    r.mixer = cfg.mixer;
    r.depth = static_cast<int>(gammas.size());
    r.num_vertices = cfg.graph.num_vertices();
    r.num_edges = static_cast<int>(cfg.graph.num_edges());
    r.num_qubits = a.num_qubits();
    r.gammas = std::move(gammas);
    r.betas = std::move(betas);
    r.expectation = ev.expectation;
    r.alpha = ev.alpha;
    r.optimum = a.optimum();
    r.wall_seconds = seconds;
    r.evaluations = evaluations;
    r.seed = seed;
    return r;
}

struct Schedule {
    std::vector<double> gammas;
    std::vector<double> betas;
};

std::vector<double> pack(const Schedule &s) {
    std::vector<double> x = s.gammas;
    x.insert(x.end(), s.betas.begin(), s.betas.end());
    return x;
}

Schedule unpack(const std::vector<double> &x) {
    const std::size_t p = x.size() / 2;
    return {{x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p)},
            {x.begin() + static_cast<std::ptrdiff_t>(p), x.end()}};
}

} // namespace

std::vector<RunRecord> optimize_schedule(const AnsatzConfig &cfg, int p_max,
                                         const OptimizeOptions &opts,
                                         const EngineOptions &engine) {
    if (p_max < 1)
        throw InvalidArgument("p_max must be at least 1");
    const Ansatz ansatz(cfg, engine);
    auto objective = [&](const std::vector<double> &x) {
        const Schedule s = unpack(x);
        return -ansatz.evaluate(s.gammas, s.betas).alpha;
    };

    std::vector<RunRecord> records;
    Schedule best;
    for (int p = 1; p <= p_max; ++p) {
        const auto t0 = std::chrono::steady_clock::now();
        int evals = 0;
        std::vector<double> start;
        if (p == 1) {
            const auto grid = landscape(ansatz, opts.grid, opts.threads);
            evals += static_cast<int>(grid.size());
            const auto top = std::max_element(
                grid.begin(), grid.end(),
                [](const auto &a, const auto &b) { return a.alpha < b.alpha; });
            start = {top->gamma, top->beta};
        } else {
            const Schedule interp{interpolate(best.gammas),
                                  interpolate(best.betas)};
            Schedule padded = best;
            padded.gammas.push_back(0.0);
            padded.betas.push_back(0.0);
            const auto a = pack(interp);
            const auto b = pack(padded);
            evals += 2;
            start = objective(a) <= objective(b) ? a : b;
        }
        const NelderMeadResult nm = nelder_mead(objective, start, opts.refine);
        evals += nm.evaluations;
        best = unpack(nm.x);
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
        records.push_back(make_record(ansatz, best.gammas, best.betas, evals,
                                      secs, opts.seed));
    }
    return records;
}

RunRecord optimize(const AnsatzConfig &cfg, const OptimizeOptions &opts,
                   const EngineOptions &engine) {
    check_config(cfg);
    return optimize_schedule(cfg, cfg.depth, opts, engine).back();
}

std::string to_json(const RunRecord &r) {
    json j{
        {"k", r.k},
        {"encoding", to_string(r.encoding)},
        {"mixer", to_string(r.mixer)},
        {"depth", r.depth},
        {"num_vertices", r.num_vertices},
        {"num_edges", r.num_edges},
        {"num_qubits", r.num_qubits},
        {"gammas", round12(r.gammas)},
        {"betas", round12(r.betas)},
        {"expectation", round12(r.expectation)},
        {"alpha", round12(r.alpha)},
        {"optimum", round12(r.optimum)},
        {"wall_seconds", round12(r.wall_seconds)},
        {"evaluations", r.evaluations},
        {"seed", r.seed},
    };
    return j.dump(2);
}

RunRecord run_record_from_json(const std::string &text) {
    try {
        const json j = json::parse(text);
        RunRecord r;
        r.k = j.at("k").get<int>();
        r.encoding = parse_encoding(j.at("encoding").get<std::string>());
        r.mixer = parse_mixer(j.at("mixer").get<std::string>());
        r.depth = j.at("depth").get<int>();
        r.num_vertices = j.at("num_vertices").get<int>();
        r.num_edges = j.at("num_edges").get<int>();
        r.num_qubits = j.at("num_qubits").get<int>();
        r.gammas = j.at("gammas").get<std::vector<double>>();
        r.betas = j.at("betas").get<std::vector<double>>();
        r.expectation = j.at("expectation").get<double>();
        r.alpha = j.at("alpha").get<double>();
        r.optimum = j.at("optimum").get<double>();
        r.wall_seconds = j.at("wall_seconds").get<double>();
        r.evaluations = j.at("evaluations").get<int>();
        r.seed = j.at("seed").get<std::uint64_t>();
        return r;
    } catch (const json::exception &e) {
        throw ParseError(std::string("run record: ") + e.what());
    }
}

// Resources

std::string prior_work_census(int k) {
    if (k < 2)
        throw InvalidArgument("k must be at least 2");
    const int n_k = qubits_per_color(k);
    const std::string ep2 =
        format_census({{class_name("Ph", n_k - 1), 1}});
    const std::string cx = std::to_string(2 * n_k) + "CX";
    if (is_power_of_two(k))
        return ep2 + ", " + cx;
    const long a = (1L << n_k) - (k - 1);
    return ep2 + ", " + std::to_string(a * (a - 1)) + "(" +
           format_census({{class_name("X", n_k), 4}}) + ", " +
           format_census({{"C2Ph", 1}}) + "), " + cx;
}

ResourceReport resource_report(int k, Encoding e, MixerKind m,
                               int num_vertices, int num_edges) {
    check_compatible(k, e, m);
    if (num_vertices < 1 || num_edges < 0)
        throw InvalidArgument("need |V| >= 1 and |E| >= 0");
    const auto table = default_decomposition_table();
    const int n_k = qubits_per_color(k);
    constexpr double kProbe = 0.37;

    ResourceReport r;
    r.k = k;
    r.encoding = e;
    r.mixer = m;
    r.num_vertices = num_vertices;
    r.num_edges = num_edges;

    std::vector<std::string> missing;
    auto cost_of = [&](const Census &c) -> long {
        try {
            return cx_equivalent_cost(c, table);
        } catch (const Error &err) {
            missing.emplace_back(err.what());
            return -1;
        }
    };

    const int ks = separator_k(k, e);
    const RelationVariant var = separator_variant(k, e);
    r.separator_available = has_separator_circuit(ks, var);
    if (r.separator_available) {
        r.separator_per_edge = census(phase_separator_circuit(ks, var, kProbe));
        r.separator_cx = cost_of(r.separator_per_edge);
    }

    const Circuit prep = block_preparation(k, e);
    r.preparation_per_vertex = census(prep);
    r.preparation_cx = cost_of(r.preparation_per_vertex);

    switch (m) {
    case MixerKind::X:
        r.mixer_per_vertex = census(mixer_x(n_k, kProbe));
        break;
    case MixerKind::LX:
        r.mixer_per_vertex = census(mixer_lx(k, kProbe));
        break;
    case MixerKind::GroverBox:
        r.mixer_per_vertex = census(mixer_grover(prep, kProbe));
        break;
    case MixerKind::Grover:
        r.mixer_global = census(
            mixer_grover(prep, kProbe, GroverScope::Global, num_vertices));
        break;
    }

    const bool global = m == MixerKind::Grover;
    r.mixer_cx = cost_of(global ? r.mixer_global : r.mixer_per_vertex);

    std::string formula = "CX per layer = ";
    formula += r.separator_available ? std::to_string(r.separator_cx)
                                     : std::string("?");
    formula += "|E| + ";
    formula += std::to_string(r.mixer_cx);
    formula += global ? " (global mixer)" : "|V|";
    const bool known = r.separator_available && r.separator_cx >= 0 &&
                       r.mixer_cx >= 0;
    if (known) {
        r.layer_cx = r.separator_cx * num_edges +
                     (global ? r.mixer_cx : r.mixer_cx * num_vertices);
        formula += " = " + std::to_string(r.layer_cx);
    } else {
        r.layer_cx = -1;
    }
    for (const auto &msg : missing)
        formula += "; " + msg;
    r.formula = formula;

    if (is_full(e) && !is_power_of_two(k))
        r.prior_work = prior_work_census(k);
    return r;
}

std::string to_json(const ResourceReport &r) {
    json j{
        {"k", r.k},
        {"encoding", to_string(r.encoding)},
        {"mixer", to_string(r.mixer)},
        {"num_vertices", r.num_vertices},
        {"num_edges", r.num_edges},
        {"separator_available", r.separator_available},
        {"separator_per_edge", r.separator_per_edge},
        {"separator_text", format_census(r.separator_per_edge)},
        {"separator_cx", r.separator_cx},
        {"mixer_per_vertex", r.mixer_per_vertex},
        {"mixer_global", r.mixer_global},
        {"mixer_cx", r.mixer_cx},
        {"preparation_per_vertex", r.preparation_per_vertex},
        {"preparation_cx", r.preparation_cx},
        {"layer_cx", r.layer_cx},
        {"formula", r.formula},
        {"prior_work", r.prior_work},
    };
    return j.dump(2);
}

std::string to_text(const ResourceReport &r) {
    std::string out;
    out += "k=" + std::to_string(r.k) + " encoding=" + to_string(r.encoding) +
           " mixer=" + to_string(r.mixer) +
           " |V|=" + std::to_string(r.num_vertices) +
           " |E|=" + std::to_string(r.num_edges) + "\n";
    if (r.separator_available)
        out += "separator: " + format_census(r.separator_per_edge) +
               " per edge (" + std::to_string(r.separator_cx) + " CX)\n";
    else
        out += "separator: no circuit for this relation\n";
    if (r.mixer == MixerKind::Grover)
        out += "mixer: " + format_census(r.mixer_global) + " per layer (" +
               std::to_string(r.mixer_cx) + " CX)\n";
    else
        out += "mixer: " + format_census(r.mixer_per_vertex) +
               " per vertex (" + std::to_string(r.mixer_cx) + " CX)\n";
    out += "preparation: " + format_census(r.preparation_per_vertex) +
           " per vertex (" + std::to_string(r.preparation_cx) + " CX)\n";
    out += r.formula + "\n";
    if (!r.prior_work.empty())
        out += "prior work: " + r.prior_work + " per edge\n";
    return out;
}

} // namespace maxkcut
