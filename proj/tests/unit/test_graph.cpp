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
#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "repnet/error.hpp"
#include "repnet/graph.hpp"
#include "repnet/rng.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace repnet {
namespace {

using testing::load_matrix;

TEST(Sccs, CorePeripheryNetwork) {
    const auto net = load_matrix("core_periphery_5.txt");
    const auto a = compute_sccs(net);
    EXPECT_EQ(a.core, (std::vector<NodeId>{0, 1, 2}));
    EXPECT_EQ(a.core_size, 3u);
    EXPECT_TRUE(a.is_core_alive);
    EXPECT_EQ(a.periphery(5), (std::vector<NodeId>{3, 4}));
    EXPECT_TRUE(a.whole_network_component);
    EXPECT_EQ(a.sccs.size(), 3u);
}

TEST(Sccs, EmptyAndEdgeless) {
    const auto empty = compute_sccs(DirectedNetwork(0));
    EXPECT_TRUE(empty.sccs.empty());
    EXPECT_FALSE(empty.is_core_alive);
    EXPECT_EQ(empty.core_size, 0u);

    const auto bare = compute_sccs(DirectedNetwork(4));
    EXPECT_EQ(bare.sccs.size(), 4u);
    for (const auto& c : bare.sccs) EXPECT_EQ(c.size(), 1u);
    EXPECT_FALSE(bare.is_core_alive);
    EXPECT_TRUE(bare.core.empty());
}

TEST(Sccs, TieBrokenByLargerEigenvalue) {
    // {0,1,2} is a plain 3-cycle; {3,4,5} is a 3-cycle with an extra chord.
    DirectedNetwork net(6);
    net.add_edge(0, 1);
    net.add_edge(1, 2);
    net.add_edge(2, 0);
    net.add_edge(3, 4);
    net.add_edge(4, 5);
    net.add_edge(5, 3);
    net.add_edge(4, 3);
    EXPECT_EQ(compute_sccs(net).core, (std::vector<NodeId>{3, 4, 5}));
}

TEST(Sccs, FullTieBrokenBySmallestId) {
    DirectedNetwork net(4);
    net.add_edge(3, 2);
    net.add_edge(2, 3);
    net.add_edge(0, 1);
    net.add_edge(1, 0);
    EXPECT_EQ(compute_sccs(net).core, (std::vector<NodeId>{0, 1}));
}

TEST(Sccs, MatchReachabilityOracle) {
    Rng rng(2024);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = 1 + rng.below(8);
        const double p = 0.05 + 0.5 * rng.uniform();
        const auto net = testing::random_graph(n, p, rng);
        const auto a = compute_sccs(net);
        const std::set<std::vector<NodeId>> got(a.sccs.begin(), a.sccs.end());
        ASSERT_EQ(got, testing::components_by_reachability(net)) << "iteration " << iter;
        // The core is a largest component of size >= 2.
        std::size_t largest = 0;
        for (const auto& c : a.sccs) largest = std::max(largest, c.size());
        EXPECT_EQ(a.is_core_alive, largest >= 2);
        if (a.is_core_alive) EXPECT_EQ(a.core_size, largest);
    }
}

TEST(Sccs, PermutationEquivariance) {
    Rng rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = 2 + rng.below(10);
        const auto net = testing::random_graph(n, 0.25, rng);
        std::vector<NodeId> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        const auto a = compute_sccs(net);
        const auto b = compute_sccs(net.permuted(perm));
        std::set<std::vector<NodeId>> mapped;
        for (const auto& c : a.sccs) {
            std::vector<NodeId> m;
            for (NodeId v : c) m.push_back(perm[v]);
            std::sort(m.begin(), m.end());
            mapped.insert(m);
        }
        EXPECT_EQ(mapped, std::set<std::vector<NodeId>>(b.sccs.begin(), b.sccs.end()));
        EXPECT_EQ(a.core_size, b.core_size);
    }
}

TEST(WholeNetwork, Examples) {
    EXPECT_TRUE(is_whole_network(load_matrix("core_periphery_5.txt")));
    DirectedNetwork two(4);
    two.add_edge(0, 1);
    two.add_edge(1, 0);
    two.add_edge(2, 3);
    two.add_edge(3, 2);
    EXPECT_FALSE(is_whole_network(two));
    EXPECT_FALSE(is_whole_network(DirectedNetwork(0)));
    EXPECT_FALSE(is_whole_network(DirectedNetwork(3)));
}

TEST(WholeNetwork, MatchesUnionFindOracle) {
    Rng rng(77);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto net = testing::random_graph(6, 0.05 + 0.3 * rng.uniform(), rng);
        ASSERT_EQ(is_whole_network(net), testing::weakly_connected_without_isolates(net));
    }
}

TEST(Degrees, FollowerCounts) {
    const auto d = degrees(load_matrix("core_periphery_5.txt"));
    EXPECT_EQ(d.in, (std::vector<std::size_t>{2, 1, 1, 1, 1}));
    EXPECT_EQ(d.out, (std::vector<std::size_t>{1, 3, 1, 1, 0}));
    const auto z = degrees(DirectedNetwork(3));
    EXPECT_EQ(z.in, (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_EQ(z.out, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(Degrees, HandshakeIdentity) {
    Rng rng(3);
    const auto net = testing::random_graph(30, 0.2, rng);
    const auto d = degrees(net);
    EXPECT_EQ(std::accumulate(d.in.begin(), d.in.end(), std::size_t{0}), net.edge_count());
    EXPECT_EQ(std::accumulate(d.out.begin(), d.out.end(), std::size_t{0}), net.edge_count());
}

TEST(Cycles, CorePeripheryNetwork) {
    const auto r = enumerate_cycles(load_matrix("core_periphery_5.txt"));
    const std::set<std::vector<NodeId>> got(r.cycles.begin(), r.cycles.end());
    EXPECT_EQ(got, (std::set<std::vector<NodeId>>{{0, 1}, {0, 1, 2}}));
    EXPECT_EQ(r.count_by_length, (std::map<std::size_t, std::size_t>{{2, 1}, {3, 1}}));
    EXPECT_FALSE(r.truncated);
}

TEST(Cycles, WorkedExamples) {
    using Counts = std::map<std::size_t, std::size_t>;
    EXPECT_EQ(enumerate_cycles(load_matrix("cycles_1.txt")).count_by_length, (Counts{{3, 1}}));
    EXPECT_EQ(enumerate_cycles(load_matrix("cycles_2.txt")).count_by_length, (Counts{{3, 1}, {4, 1}}));
    EXPECT_EQ(enumerate_cycles(load_matrix("cycles_3.txt")).count_by_length, (Counts{{2, 1}, {3, 1}, {4, 1}}));
    EXPECT_EQ(enumerate_cycles(load_matrix("cycles_4.txt")).count_by_length, (Counts{{3, 1}, {5, 1}}));
    EXPECT_EQ(enumerate_cycles(load_matrix("cycles_5.txt")).count_by_length, (Counts{{3, 2}, {4, 1}}));
}

TEST(Cycles, DagHasNone) {
    DirectedNetwork net(5);
    for (NodeId u = 0; u < 5; ++u)
        for (NodeId v = u + 1; v < 5; ++v) net.add_edge(u, v);
    const auto r = enumerate_cycles(net);
    EXPECT_TRUE(r.cycles.empty());
    EXPECT_TRUE(r.count_by_length.empty());
}

TEST(Cycles, MatchBruteForce) {
    Rng rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        const auto net = testing::random_graph(6, 0.1 + 0.4 * rng.uniform(), rng);
        const auto r = enumerate_cycles(net);
        const std::set<std::vector<NodeId>> got(r.cycles.begin(), r.cycles.end());
        ASSERT_EQ(got.size(), r.cycles.size()) << "duplicate cycle listed";
        ASSERT_EQ(got, testing::brute_force_cycles(net)) << "iteration " << iter;
        std::size_t total = 0;
        for (const auto& [len, c] : r.count_by_length) total += c;
        EXPECT_EQ(total, r.cycles.size());
        EXPECT_EQ(compute_sccs(net).is_core_alive, !r.cycles.empty());
    }
}

TEST(Cycles, BudgetTruncates) {
    DirectedNetwork net(6);
    for (NodeId u = 0; u < 6; ++u)
        for (NodeId v = 0; v < 6; ++v)
            if (u != v) net.add_edge(u, v);
    const auto r = enumerate_cycles(net, 64, 10);
    EXPECT_TRUE(r.truncated);
    EXPECT_EQ(r.cycles.size(), 10u);
}

TEST(Cycles, SizeGuard) {
    EXPECT_THROW(enumerate_cycles(DirectedNetwork(65)), TooLargeError);
    EXPECT_NO_THROW(enumerate_cycles(DirectedNetwork(10), 10));
}

}  // namespace
}  // namespace repnet
