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

#include "oracles.hpp"

#include "maxkcut/ansatz.hpp"
#include "maxkcut/error.hpp"
#include "maxkcut/random.hpp"
#include "maxkcut/statevector.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace maxkcut;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using std::numbers::pi;

namespace {

double max_abs(const MatrixXcd &m) { return m.cwiseAbs().maxCoeff(); }

std::vector<double> angles(std::uint64_t seed, int count = 20) {
    Rng rng(seed);
    std::vector<double> t(count);
    for (double &x : t)
        x = 4.0 * pi * uniform01(rng) - 2.0 * pi;
    return t;
}

// diag(e^{it [a ~ b]}) on |a>|b>, written out from the relation.
MatrixXcd oracle_separator(const ColorRelation &rel, double t) {
    const int d = rel.domain_size();
    MatrixXcd u = MatrixXcd::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            u(a * d + b, a * d + b) =
                rel.equivalent(a, b) ? std::polar(1.0, t) : Complex{1.0};
    return u;
}

MatrixXcd pauli_string(const std::string &s) {
    const int n = static_cast<int>(s.size());
    MatrixXcd m = MatrixXcd::Identity(1 << n, 1 << n);
    for (int q = 0; q < n; ++q) {
        if (s[q] == 'X')
            m = oracle::on_qubit(oracle::pauli_x(), q, n) * m;
        else if (s[q] == 'Z')
            m = oracle::on_qubit(oracle::pauli_z(), q, n) * m;
    }
    return m;
}

MatrixXcd expm_hermitian(const MatrixXcd &h, double beta) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
    VectorXcd phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases(i) = std::polar(1.0, -beta * es.eigenvalues()(i));
    return es.eigenvectors() * phases.asDiagonal() *
           es.eigenvectors().adjoint();
}

VectorXcd prepared(const Circuit &prep) {
    Statevector s(prep.num_qubits());
    s.apply(prep);
    VectorXcd v(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t i = 0; i < s.dimension(); ++i)
        v(static_cast<Eigen::Index>(i)) = s[i];
    return v;
}

std::vector<int> first_labels(int k) {
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

TEST_CASE("relation_for") {
    CHECK(relation_for(4, RelationVariant::Trivial) == clr_trivial(2));
    CHECK(relation_for(4, RelationVariant::Balanced) == clr_trivial(2));
    CHECK(relation_for(5, RelationVariant::Balanced) == clr_balanced(5));
    CHECK(relation_for(6, RelationVariant::LessThan) == clr_less_than_k(6));
    CHECK_THROWS_AS((void)relation_for(6, RelationVariant::Trivial),
                    InvalidArgument);
}

TEST_CASE("separator circuits equal the diagonal oracle") {
    int checked = 0;
    for (int k = 2; k <= 9; ++k) {
        for (auto v : {RelationVariant::Trivial, RelationVariant::LessThan,
                       RelationVariant::Balanced}) {
            if (!has_separator_circuit(k, v))
                continue;
            const ColorRelation rel = relation_for(k, v);
            for (double t : angles(17 * k + static_cast<int>(v))) {
                const MatrixXcd u = unitary(phase_separator_circuit(k, v, t));
                CHECK(max_abs(u - oracle_separator(rel, t)) < 1e-9);
                const auto diag = phase_separator_oracle(rel, t);
                for (Eigen::Index i = 0; i < u.rows(); ++i)
                    CHECK(std::abs(u(i, i) - diag[i]) < 1e-9);
                ++checked;
            }
        }
    }
    // power-of-two k accept all three variants
    CHECK(checked == 20 * 18);
}

TEST_CASE("separator availability") {
    CHECK(has_separator_circuit(9, RelationVariant::LessThan));
    CHECK_FALSE(has_separator_circuit(9, RelationVariant::Balanced));
    CHECK_FALSE(has_separator_circuit(10, RelationVariant::LessThan));
    CHECK_FALSE(has_separator_circuit(5, RelationVariant::Trivial));
    CHECK(has_separator_circuit(16, RelationVariant::Trivial));
    CHECK_THROWS_AS((void)phase_separator_circuit(10, RelationVariant::LessThan,
                                                  0.1),
                    InvalidArgument);
}

TEST_CASE("separator gate census") {
    auto census_of = [](int k, RelationVariant v) {
        return census(phase_separator_circuit(k, v, 0.3));
    };
    using R = RelationVariant;
    CHECK(census_of(3, R::LessThan) == Census{{"CPh", 1}, {"C2Ph", 1}, {"CX", 2}});
    CHECK(census_of(5, R::LessThan) == Census{{"CPh", 1}, {"C3Ph", 1}, {"CX", 4}});
    CHECK(census_of(6, R::Balanced) == Census{{"C2Ph", 1}, {"C3Ph", 1}, {"CX", 8}});
    CHECK(census_of(5, R::Balanced) ==
          Census{{"C2Ph", 1}, {"C3Ph", 1}, {"C4Ph", 1}, {"CX", 10}});
    CHECK(census_of(7, R::LessThan) == Census{{"C2Ph", 1}, {"C4Ph", 1}, {"CX", 6}});
    CHECK(census_of(6, R::LessThan) ==
          Census{{"C2Ph", 1}, {"C3Ph", 1}, {"C4Ph", 1}, {"C2X", 2}, {"CX", 6}});
    CHECK(census_of(9, R::LessThan) == Census{{"CPh", 1}, {"C4Ph", 1}, {"CX", 6}});
    CHECK(census_of(2, R::Trivial) == Census{{"Ph", 1}, {"CX", 2}});
    CHECK(census_of(4, R::Trivial) == Census{{"CPh", 1}, {"CX", 4}});
    CHECK(census_of(8, R::Trivial) == Census{{"C2Ph", 1}, {"CX", 6}});
    CHECK(census_of(16, R::Trivial) == Census{{"C3Ph", 1}, {"CX", 8}});
}

TEST_CASE("fired basis states bound the census") {
    // A C^l Ph on 2 n_k qubits fires on 2^{2 n_k - l - 1} states; the
    // separator must fire on exactly the equal pairs.
    for (int k : {3, 5, 6, 7}) {
        for (auto v : {RelationVariant::LessThan, RelationVariant::Balanced}) {
            const ColorRelation rel = relation_for(k, v);
            int pairs = 0;
            for (int a = 0; a < rel.domain_size(); ++a)
                for (int b = 0; b < rel.domain_size(); ++b)
                    pairs += rel.equivalent(a, b);
            const MatrixXcd u =
                unitary(phase_separator_circuit(k, v, 0.77));
            int fired = 0;
            for (Eigen::Index i = 0; i < u.rows(); ++i)
                fired += std::abs(u(i, i) - 1.0) > 1e-9;
            CHECK(fired == pairs);
        }
    }
}

TEST_CASE("power-of-two separator restricted to feasible labels") {
    for (int k : {3, 5, 6, 7}) {
        const int n = qubits_per_color(k);
        for (double t : angles(k, 5)) {
            const MatrixXcd u = unitary(phase_separator_power2(n, t));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    CHECK(std::abs(u((a << n) | b, (a << n) | b) -
                                   (a == b ? std::polar(1.0, t) : Complex{1})) <
                          1e-9);
        }
    }
}

TEST_CASE("2^l+1 construction") {
    for (int l = 1; l <= 3; ++l) {
        const int k = (1 << l) + 1;
        const MatrixXcd u = unitary(phase_separator_2l_plus1(l, 0.5));
        CHECK(max_abs(u - oracle_separator(clr_less_than_k(k), 0.5)) < 1e-9);
    }
}

TEST_CASE("subspace preparations are uniform over the first k labels") {
    for (int k : {3, 5, 6, 7}) {
        const VectorXcd v = prepared(prepare_subspace(k));
        const double amp = 1.0 / std::sqrt(static_cast<double>(k));
        for (Eigen::Index x = 0; x < v.size(); ++x) {
            if (x < k)
                CHECK(std::abs(v(x) - v(0)) < 1e-10);
            CHECK(std::abs(std::abs(v(x)) - (x < k ? amp : 0.0)) < 1e-10);
        }
    }
    CHECK_THROWS_AS((void)prepare_subspace(9), InvalidArgument);
}

TEST_CASE("uncorrected preparations only differ by relative phases") {
    for (int k : {3, 6, 7}) {
        const VectorXcd v = prepared(prepare_subspace(k, false));
        for (Eigen::Index x = 0; x < v.size(); ++x)
            CHECK(std::abs(std::abs(v(x)) -
                           (x < k ? 1.0 / std::sqrt(double(k)) : 0.0)) < 1e-10);
    }
}

TEST_CASE("X mixer") {
    for (double b : {0.1, 0.8, 2.9})
        CHECK(max_abs(unitary(mixer_x(3, b)) - oracle::x_mixer(3, b)) < 1e-12);
    // period pi up to the global phase (-1)^n
    CHECK(max_abs(unitary(mixer_x(2, 0.4 + pi)) - unitary(mixer_x(2, 0.4))) <
          1e-12);
    CHECK(max_abs(unitary(mixer_x(3, 0.4 + pi)) + unitary(mixer_x(3, 0.4))) <
          1e-12);
}

TEST_CASE("LX mixer is the ordered product of term exponentials") {
    for (int k : {3, 5, 6, 7}) {
        const int n = qubits_per_color(k);
        for (double beta : {0.3, 1.1, 2.5}) {
            MatrixXcd want = MatrixXcd::Identity(1 << n, 1 << n);
            for (const auto &term : lx_terms(k)) {
                MatrixXcd h = pauli_string(term.x_part);
                for (const auto &g : term.generators)
                    h = h * (MatrixXcd::Identity(1 << n, 1 << n) +
                             pauli_string(g)) /
                        2.0;
                want = expm_hermitian(h, beta) * want;
            }
            CHECK(max_abs(unitary(mixer_lx(k, beta)) - want) < 1e-10);
        }
    }
    CHECK_THROWS_AS((void)lx_terms(4), InvalidArgument);
}

TEST_CASE("LX mixer cost and validity") {
    const auto table = default_decomposition_table();
    const std::map<int, long> cost{{3, 4}, {5, 12}, {6, 4}, {7, 6}};
    for (int k : {3, 5, 6, 7}) {
        CHECK(cx_equivalent_cost(mixer_lx(k, 0.2), table) == cost.at(k));
        const auto report = validate_mixer(
            [k](double b) { return mixer_lx(k, b); }, first_labels(k));
        CHECK(report.preserves);
        CHECK(report.max_leakage < 1e-10);
        CHECK(report.connected);
    }
}

TEST_CASE("validate_mixer rejects leaking and disconnected mixers") {
    const auto leak =
        validate_mixer([](double b) { return mixer_x(2, b); }, first_labels(3));
    CHECK_FALSE(leak.preserves);
    CHECK(leak.max_leakage > 1e-3);
    CHECK_FALSE(leak.valid());

    const auto stuck = validate_mixer(
        [](double b) {
            Circuit c(2);
            c.append(gates::rz(0, b));
            return c;
        },
        first_labels(3));
    CHECK(stuck.preserves);
    CHECK_FALSE(stuck.connected);
    CHECK(stuck.direct_transitions.empty());
}

TEST_CASE("LX k=3 moves between neighbouring labels only") {
    const auto r =
        validate_mixer([](double b) { return mixer_lx(3, b); }, first_labels(3));
    // IX<ZI> links 0-1, XI<IZ> links 0-2
    CHECK(r.direct_transitions.count({0, 1}) == 1);
    CHECK(r.direct_transitions.count({0, 2}) == 1);
}

TEST_CASE("Grover mixer spectral identity") {
    for (int k : {3, 5, 6, 7}) {
        const Circuit prep = prepare_subspace(k);
        const VectorXcd f = prepared(prep);
        const MatrixXcd proj = f * f.adjoint();
        const auto dim = f.size();
        for (double beta : {0.4, 1.9, 3.3}) {
            const MatrixXcd want =
                MatrixXcd::Identity(dim, dim) -
                (1.0 - std::polar(1.0, -beta)) * proj;
            const MatrixXcd u = unitary(mixer_grover(prep, beta));
            CHECK(max_abs(u - want) < 1e-10);
            CHECK(max_abs(u - expm_hermitian(proj, beta)) < 1e-10);
            CHECK(max_abs(unitary(mixer_grover(prep, beta + 2 * pi)) - u) <
                  1e-10);
        }
        const auto report = validate_mixer(
            [&prep](double b) { return mixer_grover(prep, b); },
            first_labels(k));
        CHECK(report.valid());
        CHECK(report.direct_transitions.size() ==
              static_cast<std::size_t>(k * (k - 1) / 2));
    }
}

TEST_CASE("Grover scopes and the box product") {
    const Circuit prep = prepare_subspace(3);
    const VectorXcd f = prepared(prep);
    const MatrixXcd p = f * f.adjoint();
    const double beta = 0.83;

    // per vertex: exp(-i beta (P box P))
    const MatrixXcd box =
        unitary(mixer_grover(prep, beta, GroverScope::PerVertex, 2));
    CHECK(max_abs(box - expm_hermitian(box_product(p, p), beta)) < 1e-10);

    // global: I - (1 - e^{-i beta}) |FF><FF|
    VectorXcd ff(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            ff(4 * a + b) = f(a) * f(b);
    const MatrixXcd global =
        unitary(mixer_grover(prep, beta, GroverScope::Global, 2));
    CHECK(max_abs(global - (MatrixXcd::Identity(16, 16) -
                            (1.0 - std::polar(1.0, -beta)) * ff *
                                ff.adjoint())) < 1e-10);

    CHECK_THROWS_AS((void)mixer_grover(prep, beta, GroverScope::Global, 0),
                    InvalidArgument);
}

TEST_CASE("box product against Kronecker sums") {
    MatrixXcd g(2, 2), h(3, 3);
    g << 1, Complex(0, 2), Complex(0, -2), 3;
    h << 0, 1, 0, 1, 0, 1, 0, 1, 5;
    const MatrixXcd out = box_product(g, h);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 3; ++d) {
                    const Complex want = (b == d ? g(a, c) : Complex{}) +
                                         (a == c ? h(b, d) : Complex{});
                    CHECK(out(3 * a + b, 3 * c + d) == want);
                }
    CHECK_THROWS_AS((void)box_product(MatrixXcd(2, 3), h), InvalidArgument);
}
