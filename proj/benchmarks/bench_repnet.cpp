// Copyright 2026 The repnet Authors.
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
#include <benchmark/benchmark.h>

#include "repnet/dynamics.hpp"
#include "repnet/experiment.hpp"
#include "repnet/graph.hpp"
#include "repnet/reputation.hpp"
#include "repnet/rng.hpp"

namespace {

using namespace repnet;

// range(0): n, range(1): average links per user.
DirectedNetwork make_network(const benchmark::State& state, std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(seed);
    return random_network(n, RewireModel::from_links_per_user(static_cast<double>(state.range(1)), n), rng);
}

void BM_Equilibrium(benchmark::State& state) {
    const auto net = make_network(state, 1);
    for (auto _ : state) benchmark::DoNotOptimize(equilibrium(net));
    state.counters["edges"] = static_cast<double>(net.edge_count());
}
BENCHMARK(BM_Equilibrium)->Args({100, 1})->Args({100, 25})->Args({1000, 5})->Args({1000, 25});

void BM_ComputeSccs(benchmark::State& state) {
    const auto net = make_network(state, 2);
    for (auto _ : state) benchmark::DoNotOptimize(compute_sccs(net));
}
BENCHMARK(BM_ComputeSccs)->Args({100, 1})->Args({100, 25})->Args({1000, 5});

void BM_EnumerateCycles(benchmark::State& state) {
    const auto net = make_network(state, 3);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles(net, 64, 10000));
}
BENCHMARK(BM_EnumerateCycles)->Args({12, 2})->Args({24, 2});

void BM_Step(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto model = RewireModel::from_links_per_user(static_cast<double>(state.range(1)) / 4.0, n);
    Rng rng(4);
    auto net = random_network(n, model, rng);
    const ExitRule rule{0.2};
    const SolverConfig solver;
    std::size_t t = 0;
    for (auto _ : state) {
        auto r = step(net, rule, model, solver, rng, t++);
        net = std::move(r.network);
    }
}
// Second argument is links per user times four: 1 is the sparse regime (0.25), 99 is p = 0.25.
BENCHMARK(BM_Step)->Args({100, 1})->Args({100, 99});

void BM_SimulateRun(benchmark::State& state) {
    ExperimentConfig cfg;
    cfg.n = 100;
    cfg.density = Density{Density::Kind::LinksPerUser, 0.25};
    cfg.tau_values = {0.2};
    cfg.t_max = static_cast<std::size_t>(state.range(0));
    cfg.seed = 5;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_run(cfg, 0, 0));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SimulateRun)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
