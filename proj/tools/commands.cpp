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

#include "commands.hpp"

#include "maxkcut/ansatz.hpp"
#include "maxkcut/circuit.hpp"
#include "maxkcut/coloring.hpp"
#include "maxkcut/error.hpp"
#include "maxkcut/graph.hpp"
#include "maxkcut/qaoa.hpp"
#include "maxkcut/random.hpp"
#include "maxkcut/statevector.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

namespace maxkcut::cli {

namespace {

constexpr double kTol = 1e-9;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw Error("cannot write " + path.string());
    os << text;
    if (!os)
        throw Error("failed writing " + path.string());
}

std::vector<double> random_angles(std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<double> t(count);
    for (double &x : t)
        x = (2.0 * uniform01(rng) - 1.0) * 2.0 * std::numbers::pi;
    return t;
}

CheckResult compare_diagonal(std::string scope, std::string name,
                             const Eigen::MatrixXcd &u,
                             const std::vector<Complex> &diag, double t) {
    CheckResult r{std::move(scope), std::move(name), 0.0, true, ""};
    const auto dim = static_cast<Eigen::Index>(diag.size());
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            const Complex want = i == j ? diag[i] : Complex{};
            const double d = std::abs(u(i, j) - want);
            if (d > r.deviation)
                r.deviation = d;
            if (d >= kTol && r.passed) {
                r.passed = false;
                r.detail = "t=" + fmt(t) + " entry (" + std::to_string(i) +
                           "," + std::to_string(j) + ") deviation " + fmt(d);
            }
        }
    }
    return r;
}

void merge(CheckResult &into, const CheckResult &r) {
    into.deviation = std::max(into.deviation, r.deviation);
    if (!r.passed && into.passed) {
        into.passed = false;
        into.detail = r.detail;
    }
}

} // namespace

std::filesystem::path resolve_output(const std::string &path) {
    std::filesystem::path p(path);
    if (p.is_absolute())
        return p;
    if (const char *dir = std::getenv(kOutDirEnv); dir && *dir)
        return std::filesystem::path(dir) / p;
    return p;
}

std::vector<CheckResult> validate_separators() {
    std::vector<CheckResult> out;
    const auto angles = random_angles(20240611, 20);
    for (int k = 2; k <= 9; ++k) {
        std::vector<RelationVariant> variants;
        if (is_power_of_two(k))
            variants = {RelationVariant::Trivial};
        else
            variants = {RelationVariant::LessThan, RelationVariant::Balanced};
        for (auto v : variants) {
            const std::string name = "k=" + std::to_string(k) + " " +
                                     to_string(v);
            if (!has_separator_circuit(k, v)) {
                out.push_back({"separators", name, 0.0, true,
                               "no circuit, oracle only"});
                continue;
            }
            const ColorRelation rel = relation_for(k, v);
            CheckResult total{"separators", name, 0.0, true, ""};
            for (double t : angles) {
                auto r = compare_diagonal(
                    "separators", name,
                    unitary(phase_separator_circuit(k, v, t)),
                    phase_separator_oracle(rel, t), t);
                if (!r.passed)
                    r.detail = name + " " + r.detail;
                merge(total, r);
            }
            out.push_back(total);
        }
    }
    // power-of-two separator restricted to the k feasible labels
    for (int k : {3, 5, 6, 7}) {
        const int n_k = qubits_per_color(k);
        const std::string name = "k=" + std::to_string(k) + " restricted";
        CheckResult total{"separators", name, 0.0, true, ""};
        for (double t : angles) {
            const Eigen::MatrixXcd u = unitary(phase_separator_power2(n_k, t));
            for (int a = 0; a < k; ++a) {
                for (int b = 0; b < k; ++b) {
                    for (int c = 0; c < k; ++c) {
                        for (int d = 0; d < k; ++d) {
                            const Complex want =
                                (a == c && b == d)
                                    ? (a == b ? std::polar(1.0, t)
                                              : Complex{1.0})
                                    : Complex{};
                            const double dev = std::abs(
                                u((a << n_k) | b, (c << n_k) | d) - want);
                            total.deviation = std::max(total.deviation, dev);
                            if (dev >= kTol && total.passed) {
                                total.passed = false;
                                total.detail = name + " t=" + fmt(t) +
                                               " state " + std::to_string(a) +
                                               "," + std::to_string(b);
                            }
                        }
                    }
                }
            }
        }
        out.push_back(total);
    }
    return out;
}

std::vector<CheckResult> validate_mixers() {
    std::vector<CheckResult> out;
    const std::map<int, long> lx_cost{{3, 4}, {5, 12}, {6, 4}, {7, 6}};
    const auto table = default_decomposition_table();
    for (int k : {3, 5, 6, 7}) {
        std::vector<int> feasible(k);
        std::iota(feasible.begin(), feasible.end(), 0);

        const MixerReport lx = validate_mixer(
            [k](double b) { return mixer_lx(k, b); }, feasible);
        const long cx = cx_equivalent_cost(mixer_lx(k, 0.3), table);
        CheckResult r{"mixers", "lx k=" + std::to_string(k), lx.max_leakage,
                      lx.valid() && cx == lx_cost.at(k), ""};
        r.detail = "CX " + std::to_string(cx);
        if (!lx.valid())
            r.detail += "; " + lx.detail;
        out.push_back(r);

        const Circuit prep = prepare_subspace(k);
        const MixerReport gr = validate_mixer(
            [&prep](double b) { return mixer_grover(prep, b); }, feasible);
        out.push_back({"mixers", "grover k=" + std::to_string(k),
                       gr.max_leakage, gr.valid(), gr.detail});
    }
    return out;
}

std::vector<CheckResult> validate_preps() {
    std::vector<CheckResult> out;
    for (int k : {3, 5, 6, 7}) {
        Statevector s(qubits_per_color(k));
        s.apply(prepare_subspace(k));
        const double want = 1.0 / std::sqrt(static_cast<double>(k));
        CheckResult r{"preps", "k=" + std::to_string(k), 0.0, true, ""};
        for (std::size_t x = 0; x < s.dimension(); ++x) {
            const double target = static_cast<int>(x) < k ? want : 0.0;
            const double d = std::abs(std::abs(s[x]) - target);
            r.deviation = std::max(r.deviation, d);
            if (d >= 1e-10 && r.passed) {
                r.passed = false;
                r.detail = "label " + std::to_string(x) + " |amp| " +
                           fmt(std::abs(s[x]));
            }
        }
        out.push_back(r);
    }
    return out;
}

namespace {

struct EngineFlags {
    std::string graph;
    int k = 3;
    std::string encoding = "full_lt";
    std::string mixer = "x";
    int threads = 1;
    int max_qubits = kDefaultMaxQubits;
};

void add_engine_flags(CLI::App *sub, EngineFlags &f) {
    sub->add_option("--graph", f.graph, "graph file (JSON or edge list)")
        ->required();
    sub->add_option("--k", f.k, "number of colours")->required();
    sub->add_option("--encoding", f.encoding, "full-lt | full-bal | subspace");
    sub->add_option("--mixer", f.mixer, "x | lx | grover | grover-box");
    sub->add_option("--threads", f.threads, "worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-qubits", f.max_qubits, "statevector size cap");
}

AnsatzConfig make_config(const EngineFlags &f, int depth) {
    AnsatzConfig cfg;
    cfg.graph = load_graph(f.graph);
    cfg.k = f.k;
    cfg.encoding = parse_encoding(f.encoding);
    cfg.mixer = parse_mixer(f.mixer);
    cfg.depth = depth;
    check_config(cfg);
    return cfg;
}

int print_checks(const std::vector<CheckResult> &checks, std::ostream &out,
                 std::ostream &err) {
    const CheckResult *first_fail = nullptr;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-11s %-22s %-14s %s\n", "scope", "case",
                  "max dev", "result");
    out << buf;
    for (const auto &c : checks) {
        std::snprintf(buf, sizeof buf, "%-11s %-22s %-14s %s", c.scope.c_str(),
                      c.name.c_str(), fmt(c.deviation).c_str(),
                      c.passed ? "PASS" : "FAIL");
        out << buf;
        if (!c.detail.empty())
            out << "  " << c.detail;
        out << "\n";
        if (!c.passed && !first_fail)
            first_fail = &c;
    }
    if (first_fail) {
        err << "validation failed: " << first_fail->scope << " "
            << first_fail->name << ": " << first_fail->detail << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"Weighted MAX k-CUT with QAOA on binary qubit encodings",
                 "maxkcut"};
    app.require_subcommand(1);

    // gen-graph
    auto *gen = app.add_subcommand("gen-graph", "generate a random graph");
    std::string gen_kind;
    int gen_n = 0, gen_m = 2;
    double gen_p = 0.5, gen_wlow = 1.0, gen_whigh = 1.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out = "graph.json";
    gen->add_option("kind", gen_kind, "er | ba")
        ->required()
        ->check(CLI::IsMember({"er", "ba"}));
    gen->add_option("--n", gen_n, "number of vertices")->required();
    gen->add_option("--p", gen_p, "edge probability (er)");
    gen->add_option("--m", gen_m, "edges per new vertex (ba)");
    gen->add_option("--weight-low", gen_wlow, "lowest edge weight (ba)");
    gen->add_option("--weight-high", gen_whigh, "highest edge weight (ba)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "output file");

    // brute-force
    auto *bf = app.add_subcommand("brute-force", "exact optimum by enumeration");
    std::string bf_graph;
    int bf_k = 2;
    bool bf_json = false;
    bf->add_option("--graph", bf_graph, "graph file")->required();
    bf->add_option("--k", bf_k, "number of colours")->required();
    bf->add_flag("--json", bf_json, "print JSON");

    // validate
    auto *val = app.add_subcommand("validate", "run the circuit invariant suite");
    std::string val_scope = "all";
    val->add_option("scope", val_scope, "separators | mixers | preps | all")
        ->check(CLI::IsMember({"separators", "mixers", "preps", "all"}));

    // landscape
    auto *land = app.add_subcommand("landscape", "p=1 grid of approximation ratios");
    EngineFlags land_f;
    add_engine_flags(land, land_f);
    int land_res = 32, land_gp = 0, land_bp = 0;
    double land_gmax = 0.0, land_bmax = 0.0;
    std::string land_out = "landscape.csv";
    land->add_option("--resolution", land_res, "points per axis")
        ->check(CLI::PositiveNumber);
    land->add_option("--gamma-points", land_gp, "points along gamma");
    land->add_option("--beta-points", land_bp, "points along beta");
    land->add_option("--gamma-max", land_gmax, "upper end of the gamma range");
    land->add_option("--beta-max", land_bmax, "upper end of the beta range");
    land->add_option("--out", land_out, "CSV file");

    // optimize
    auto *opt = app.add_subcommand("optimize", "optimize angles for p=1..p_max");
    EngineFlags opt_f;
    add_engine_flags(opt, opt_f);
    int opt_p = 1, opt_grid = 32, opt_evals = 0, opt_iters = 500;
    std::uint64_t opt_seed = 0;
    double opt_tol = 1e-6;
    std::string opt_out = "optimize.json";
    opt->add_option("--p-max", opt_p, "deepest layer count")
        ->check(CLI::PositiveNumber);
    opt->add_option("--seed", opt_seed, "seed recorded in each run");
    opt->add_option("--grid", opt_grid, "p=1 grid points per axis")
        ->check(CLI::PositiveNumber);
    opt->add_option("--max-evals", opt_evals, "simplex evaluation budget per depth");
    opt->add_option("--max-iters", opt_iters, "simplex iteration limit");
    opt->add_option("--tol", opt_tol, "simplex tolerance");
    opt->add_option("--out", opt_out, "JSON file");

    // resources
    auto *res = app.add_subcommand("resources", "gate census per layer");
    int res_k = 3, res_v = 1, res_e = 1;
    std::string res_enc = "full_lt", res_mix = "x";
    bool res_json = false;
    res->add_option("--k", res_k, "number of colours")->required();
    res->add_option("--encoding", res_enc, "full-lt | full-bal | subspace");
    res->add_option("--mixer", res_mix, "x | lx | grover | grover-box");
    res->add_option("--vertices", res_v, "|V|");
    res->add_option("--edges", res_e, "|E|");
    res->add_flag("--json", res_json, "print JSON");

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            Graph g;
            if (gen_kind == "er")
                g = generate_erdos_renyi(gen_n, gen_p, gen_seed);
            else
                g = generate_barabasi_albert(gen_n, gen_m, gen_seed, gen_wlow,
                                             gen_whigh);
            const auto path = resolve_output(gen_out);
            write_file(path, to_json(g));
            out << "|V|=" << g.num_vertices() << " |E|=" << g.num_edges()
                << " total weight=" << fmt(g.total_weight()) << " -> "
                << path.string() << "\n";
            return kExitOk;
        }
        if (bf->parsed()) {
            const Graph g = load_graph(bf_graph);
            const auto r = brute_force_max_kcut(g, bf_k);
            if (bf_json) {
                nlohmann::json j{{"k", bf_k},
                                 {"optimum", std::stod(fmt(r.optimum))},
                                 {"num_witnesses", r.witnesses.size()}};
                auto &w = j["witnesses"] = nlohmann::json::array();
                for (const auto &a : r.witnesses)
                    w.push_back(a.colors);
                out << j.dump(2) << "\n";
            } else {
                out << "optimum " << fmt(r.optimum) << " ("
                    << r.witnesses.size() << " witnesses)\n";
                if (!r.witnesses.empty()) {
                    out << "witness";
                    for (int c : r.witnesses.front().colors)
                        out << " " << c;
                    out << "\n";
                }
            }
            return kExitOk;
        }
        if (val->parsed()) {
            std::vector<CheckResult> checks;
            auto add = [&](std::vector<CheckResult> v) {
                checks.insert(checks.end(), v.begin(), v.end());
            };
            if (val_scope == "separators" || val_scope == "all")
                add(validate_separators());
            if (val_scope == "mixers" || val_scope == "all")
                add(validate_mixers());
            if (val_scope == "preps" || val_scope == "all")
                add(validate_preps());
            return print_checks(checks, out, err);
        }
        if (land->parsed()) {
            const AnsatzConfig cfg = make_config(land_f, 1);
            EngineOptions eo;
            eo.max_qubits = land_f.max_qubits;
            const Ansatz ansatz(cfg, eo);
            GridSpec grid;
            grid.gamma_points = land_gp > 0 ? land_gp : land_res;
            grid.beta_points = land_bp > 0 ? land_bp : land_res;
            grid.gamma_max = land_gmax;
            grid.beta_max = land_bmax;
            const auto points = landscape(ansatz, grid, land_f.threads);
            std::ostringstream csv;
            write_landscape_csv(csv, points);
            const auto path = resolve_output(land_out);
            write_file(path, csv.str());
            const auto top = std::max_element(
                points.begin(), points.end(),
                [](const auto &a, const auto &b) { return a.alpha < b.alpha; });
            out << "max alpha " << fmt(top->alpha) << " at gamma "
                << fmt(top->gamma) << " beta " << fmt(top->beta) << " ("
                << points.size() << " points) -> " << path.string() << "\n";
            return kExitOk;
        }
        if (opt->parsed()) {
            const AnsatzConfig cfg = make_config(opt_f, opt_p);
            EngineOptions eo;
            eo.max_qubits = opt_f.max_qubits;
            OptimizeOptions oo;
            oo.grid.gamma_points = oo.grid.beta_points = opt_grid;
            oo.refine.max_evaluations = opt_evals;
            oo.refine.max_iterations = opt_iters;
            oo.refine.tolerance = opt_tol;
            oo.threads = opt_f.threads;
            oo.seed = opt_seed;
            const auto records = optimize_schedule(cfg, opt_p, oo, eo);
            auto arr = nlohmann::json::array();
            for (const auto &r : records) {
                arr.push_back(nlohmann::json::parse(to_json(r)));
                out << "p=" << r.depth << " alpha " << fmt(r.alpha)
                    << " expectation " << fmt(r.expectation) << "\n";
            }
            const auto path = resolve_output(opt_out);
            write_file(path, arr.dump(2) + "\n");
            out << "-> " << path.string() << "\n";
            return kExitOk;
        }
        if (res->parsed()) {
            const auto r = resource_report(res_k, parse_encoding(res_enc),
                                           parse_mixer(res_mix), res_v, res_e);
            out << (res_json ? to_json(r) + "\n" : to_text(r));
            return kExitOk;
        }
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizeLimitError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace maxkcut::cli
