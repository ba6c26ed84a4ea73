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
#include "maxkcut/statevector.hpp"

#include "maxkcut/error.hpp"
#include "maxkcut/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>

namespace maxkcut {

namespace {

using Index = std::uint64_t;

void check_size(int n, int max_qubits) {
    if (n < 0)
        throw InvalidArgument("negative qubit count");
    if (n > max_qubits)
        throw SizeLimitError("statevector of " + std::to_string(n) +
                             " qubits exceeds the cap of " +
                             std::to_string(max_qubits));
}

} // namespace

Statevector::Statevector(int num_qubits, int max_qubits) : n_(num_qubits) {
    check_size(num_qubits, max_qubits);
    amps_.assign(Index{1} << n_, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

Statevector::Statevector(std::vector<Complex> amplitudes)
    : n_(0), amps_(std::move(amplitudes)) {
    if (amps_.empty() || !std::has_single_bit(amps_.size()))
        throw InvalidArgument("amplitude count must be a power of two");
    n_ = std::countr_zero(amps_.size());
}

double Statevector::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amps_)
        s += std::norm(a);
    return s;
}

void Statevector::apply(const Circuit &c) {
    if (c.num_qubits() > n_)
        throw InvalidArgument("circuit wider than the state");
    for (const auto &g : c.gates())
        apply(g);
}

void Statevector::apply(const Gate &g) {
    for (int q : g.targets)
        if (q < 0 || q >= n_)
            throw InvalidArgument("target qubit " + std::to_string(q) +
                                  " out of range");
    Index ctrl_mask = 0;
    Index ctrl_value = 0;
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
        const int q = g.controls[i];
        if (q < 0 || q >= n_)
            throw InvalidArgument("control qubit " + std::to_string(q) +
                                  " out of range");
        const Index bit = Index{1} << (n_ - 1 - q);
        ctrl_mask |= bit;
        if (g.pattern.at(i) == '1')
            ctrl_value |= bit;
    }
    auto active = [&](Index x) { return (x & ctrl_mask) == ctrl_value; };
    const Index dim = amps_.size();

    switch (g.kind) {
    case GateKind::X: {
        const Index bit = Index{1} << (n_ - 1 - g.targets[0]);
        for (Index x = 0; x < dim; ++x)
            if (!(x & bit) && active(x))
                std::swap(amps_[x], amps_[x | bit]);
        return;
    }
    case GateKind::Ph: {
        const Index bit = Index{1} << (n_ - 1 - g.targets[0]);
        const Complex phase = std::polar(1.0, g.param);
        for (Index x = 0; x < dim; ++x)
            if ((x & bit) && active(x))
                amps_[x] *= phase;
        return;
    }
    case GateKind::PauliRot: {
        // exp(-i t/2 P)|x> = cos|x> - i sin P|x>, P|x> = i^{#Y} (-1)^{..}|x^flip>.
        Index flip = 0;
        Index zmask = 0;
        int num_y = 0;
        for (std::size_t i = 0; i < g.pauli.size(); ++i) {
            const Index bit = Index{1} << (n_ - 1 - g.targets[i]);
            const char p = g.pauli[i];
            if (p == 'X' || p == 'Y')
                flip |= bit;
            if (p == 'Z' || p == 'Y')
                zmask |= bit;
            num_y += p == 'Y';
        }
        static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const Complex yphase = ipow[num_y % 4];
        // <x^flip| P |x> = yphase * (-1)^{popcount(x & zmask)} applies to
        // the Z/Y part before the flip.
        auto coeff = [&](Index x) {
            return std::popcount(x & zmask) % 2 ? -yphase : yphase;
        };
        const double c = std::cos(g.param / 2);
        const Complex ms = Complex{0.0, -std::sin(g.param / 2)};
        for (Index x = 0; x < dim; ++x) {
            if (!active(x))
                continue;
            const Index y = x ^ flip;
            if (flip == 0) {
                amps_[x] = (c + ms * coeff(x)) * amps_[x];
            } else if (x < y) {
                const Complex ax = amps_[x];
                const Complex ay = amps_[y];
                // (P a)[y] = coeff(x) a[x], (P a)[x] = coeff(y) a[y]
                amps_[x] = c * ax + ms * coeff(y) * ay;
                amps_[y] = c * ay + ms * coeff(x) * ax;
            }
        }
        return;
    }
    default:
        break;
    }

    // Generic dense kernel on the targets.
    const Eigen::MatrixXcd m = local_matrix(g);
    const int nt = static_cast<int>(g.targets.size());
    std::vector<Index> offsets(Index{1} << nt, 0);
    Index tmask = 0;
    for (int j = 0; j < nt; ++j)
        tmask |= Index{1} << (n_ - 1 - g.targets[j]);
    for (Index local = 0; local < offsets.size(); ++local)
        for (int j = 0; j < nt; ++j)
            if ((local >> (nt - 1 - j)) & 1)
                offsets[local] |= Index{1} << (n_ - 1 - g.targets[j]);
    std::vector<Complex> in(offsets.size());
    for (Index base = 0; base < dim; ++base) {
        if ((base & tmask) || !active(base))
            continue;
        for (std::size_t r = 0; r < offsets.size(); ++r)
            in[r] = amps_[base | offsets[r]];
        for (std::size_t r = 0; r < offsets.size(); ++r) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < offsets.size(); ++c)
                acc += m(static_cast<Eigen::Index>(r),
                         static_cast<Eigen::Index>(c)) *
                       in[c];
            amps_[base | offsets[r]] = acc;
        }
    }
}

void Statevector::apply_matrix(std::span<const int> qubits,
                               const Eigen::MatrixXcd &m) {
    const int nt = static_cast<int>(qubits.size());
    const Index local_dim = Index{1} << nt;
    if (static_cast<Index>(m.rows()) != local_dim ||
        static_cast<Index>(m.cols()) != local_dim)
        throw InvalidArgument("matrix size does not match qubit count");
    std::vector<Index> offsets(local_dim, 0);
    Index tmask = 0;
    for (int j = 0; j < nt; ++j) {
        if (qubits[j] < 0 || qubits[j] >= n_)
            throw InvalidArgument("qubit index out of range");
        const Index bit = Index{1} << (n_ - 1 - qubits[j]);
        if (tmask & bit)
            throw InvalidArgument("repeated qubit in apply_matrix");
        tmask |= bit;
    }
    for (Index local = 0; local < local_dim; ++local)
        for (int j = 0; j < nt; ++j)
            if ((local >> (nt - 1 - j)) & 1)
                offsets[local] |= Index{1} << (n_ - 1 - qubits[j]);

    // Row-major copy so the inner loop is contiguous.
    std::vector<Complex> mat(local_dim * local_dim);
    for (Index r = 0; r < local_dim; ++r)
        for (Index c = 0; c < local_dim; ++c)
            mat[r * local_dim + c] = m(static_cast<Eigen::Index>(r),
                                       static_cast<Eigen::Index>(c));
    std::vector<int> bits(nt);
    for (int j = 0; j < nt; ++j)
        bits[j] = n_ - 1 - qubits[j];
    std::sort(bits.begin(), bits.end());
    std::vector<Complex> in(local_dim);
    const Index groups = amps_.size() >> nt;
    for (Index g = 0; g < groups; ++g) {
        Index base = g;
        for (int b : bits)
            base = ((base >> b) << (b + 1)) | (base & ((Index{1} << b) - 1));
        for (Index r = 0; r < local_dim; ++r)
            in[r] = amps_[base | offsets[r]];
        for (Index r = 0; r < local_dim; ++r) {
            double re = 0.0, im = 0.0;
            const Complex *row = &mat[r * local_dim];
            for (Index c = 0; c < local_dim; ++c) {
                re += row[c].real() * in[c].real() - row[c].imag() * in[c].imag();
                im += row[c].real() * in[c].imag() + row[c].imag() * in[c].real();
            }
            amps_[base | offsets[r]] = {re, im};
        }
    }
}

void Statevector::apply_diagonal(std::span<const Complex> phases) {
    if (phases.size() != amps_.size())
        throw InvalidArgument("diagonal size does not match the state");
    for (std::size_t i = 0; i < amps_.size(); ++i)
        amps_[i] *= phases[i];
}

void Statevector::dump(const std::filesystem::path &path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    static_assert(std::endian::native == std::endian::little,
                  "dump assumes a little-endian host");
    for (const auto &a : amps_) {
        const double pair[2] = {a.real(), a.imag()};
        out.write(reinterpret_cast<const char *>(pair), sizeof pair);
    }
}

DiagonalObservable cost_diagonal(const Graph &g, const ColorRelation &rel,
                                 int max_qubits) {
    const int n = g.num_vertices() * rel.num_qubits();
    check_size(n, max_qubits);
    DiagonalObservable diag(Index{1} << n);
    for (Index x = 0; x < diag.size(); ++x)
        diag[x] = cost(g, decode_index(x, rel, g.num_vertices()));
    return diag;
}

double expectation(const Statevector &state, std::span<const double> diag) {
    if (diag.size() != state.dimension())
        throw InvalidArgument("observable dimension " +
                              std::to_string(diag.size()) +
                              " does not match state dimension " +
                              std::to_string(state.dimension()));
    double e = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < diag.size(); ++i)
        e += std::norm(amps[i]) * diag[i];
    return e;
}

std::string to_bitstring(std::uint64_t index, int num_qubits) {
    std::string s(num_qubits, '0');
    for (int q = 0; q < num_qubits; ++q)
        if ((index >> (num_qubits - 1 - q)) & 1)
            s[q] = '1';
    return s;
}

std::map<std::string, int> sample(const Statevector &state, int shots,
                                  std::uint64_t seed) {
    if (shots < 1)
        throw InvalidArgument("shots must be >= 1");
    const auto amps = state.amplitudes();
    std::vector<double> cumulative(amps.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i)
        cumulative[i] = acc += std::norm(amps[i]);
    Rng rng(seed);
    std::map<std::string, int> counts;
    for (int s = 0; s < shots; ++s) {
        const double r = uniform01(rng) * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
        // Skip zero-probability entries sharing the cumulative value.
        const auto idx = static_cast<std::uint64_t>(
            std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                     static_cast<std::ptrdiff_t>(amps.size()) - 1));
        ++counts[to_bitstring(idx, state.num_qubits())];
    }
    return counts;
}

} // namespace maxkcut
