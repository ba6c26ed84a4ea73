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

#include "maxkcut/ansatz.hpp"
#include "maxkcut/circuit.hpp"
#include "maxkcut/graph.hpp"
#include "maxkcut/qaoa.hpp"
#include "maxkcut/statevector.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace maxkcut;
using namespace maxkcut::gates;

namespace {

void BM_ApplyHadamardLayer(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    Statevector s(n);
    Circuit c(n);
    for (int q = 0; q < n; ++q)
        c.append(h(q));
    for (auto _ : state) {
        s.apply(c);
        benchmark::DoNotOptimize(s[0]);
    }
    state.SetItemsProcessed(state.iterations() * n * (std::int64_t{1} << n));
}
BENCHMARK(BM_ApplyHadamardLayer)->DenseRange(10, 20, 2);

void BM_ApplyControlledPhase(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    Statevector s(n);
    const Gate g = controlled(ph(n - 1, 0.3), {0, 1, 2});
    for (auto _ : state) {
        s.apply(g);
        benchmark::DoNotOptimize(s[0]);
    }
}
BENCHMARK(BM_ApplyControlledPhase)->DenseRange(10, 20, 2);

void BM_SeparatorCircuit(benchmark::State &state) {
    const int k = static_cast<int>(state.range(0));
    const int n = 2 * qubits_per_color(k);
    Statevector s(n);
    const Circuit c = phase_separator_circuit(
        k, is_power_of_two(k) ? RelationVariant::Trivial
                              : RelationVariant::LessThan,
        0.7);
    for (auto _ : state) {
        s.apply(c);
        benchmark::DoNotOptimize(s[0]);
    }
}
BENCHMARK(BM_SeparatorCircuit)->DenseRange(3, 9, 1);

void evaluate_layer(benchmark::State &state, Encoding e, MixerKind m,
                    Realization r) {
    const int k = static_cast<int>(state.range(0));
    AnsatzConfig cfg;
    cfg.graph = generate_erdos_renyi(6, 0.5, 7);
    cfg.k = k;
    cfg.encoding = e;
    cfg.mixer = m;
    EngineOptions opts;
    opts.realization = r;
    const Ansatz a(cfg, opts);
    const std::vector<double> gammas{0.4}, betas{0.3};
    for (auto _ : state)
        benchmark::DoNotOptimize(a.evaluate(gammas, betas).alpha);
}

void BM_LayerFullX(benchmark::State &state) {
    evaluate_layer(state, Encoding::FullLessThan, MixerKind::X,
                   Realization::Fast);
}
BENCHMARK(BM_LayerFullX)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_LayerSubspaceLX(benchmark::State &state) {
    evaluate_layer(state, Encoding::Subspace, MixerKind::LX, Realization::Fast);
}
BENCHMARK(BM_LayerSubspaceLX)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_LayerSubspaceGroverBox(benchmark::State &state) {
    evaluate_layer(state, Encoding::Subspace, MixerKind::GroverBox,
                   Realization::Fast);
}
BENCHMARK(BM_LayerSubspaceGroverBox)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_LayerGatesFullX(benchmark::State &state) {
    evaluate_layer(state, Encoding::FullLessThan, MixerKind::X,
                   Realization::Gates);
}
BENCHMARK(BM_LayerGatesFullX)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
