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

#include <algorithm>

#include "repnet/error.hpp"
#include "repnet/network.hpp"
#include "repnet/rng.hpp"
#include "support/oracles.hpp"

namespace repnet {
namespace {

TEST(DirectedNetwork, RejectsSelfLoopsAndOutOfRange) {
    DirectedNetwork net(3);
    EXPECT_THROW(net.add_edge(1, 1), ValidationError);
    EXPECT_THROW(net.add_edge(0, 3), ValidationError);
    EXPECT_THROW(net.add_edge(7, 0), ValidationError);
    EXPECT_EQ(net.edge_count(), 0u);
}

TEST(DirectedNetwork, DuplicateInsertIsIgnored) {
    DirectedNetwork net(3);
    EXPECT_TRUE(net.add_edge(0, 1));
    EXPECT_FALSE(net.add_edge(0, 1));
    EXPECT_EQ(net.edge_count(), 1u);
    EXPECT_TRUE(net.has_edge(0, 1));
    EXPECT_FALSE(net.has_edge(1, 0));
}

TEST(DirectedNetwork, FromEdgesRejectsDuplicates) {
    const std::vector<Edge> edges{{0, 1}, {0, 1}};
    EXPECT_THROW(DirectedNetwork::from_edges(2, edges), ValidationError);
}

TEST(DirectedNetwork, AdjacencyOrientation) {
    // Entry (0, 1) = 1: user 1 follows user 0.
    const std::vector<std::uint8_t> a{0, 1, 0, 0};
    const auto net = DirectedNetwork::from_adjacency(2, a);
    EXPECT_TRUE(net.has_edge(1, 0));
    ASSERT_EQ(net.followers(0).size(), 1u);
    EXPECT_EQ(net.followers(0)[0], 1u);
    EXPECT_EQ(net.adjacency(), a);
}

TEST(DirectedNetwork, AdjacencyRejectsDiagonal) {
    const std::vector<std::uint8_t> a{1, 0, 0, 0};
    EXPECT_THROW(DirectedNetwork::from_adjacency(2, a), ValidationError);
}

TEST(DirectedNetwork, ClearNodeDropsBothDirections) {
    DirectedNetwork net(4);
    net.add_edge(0, 1);
    net.add_edge(1, 0);
    net.add_edge(2, 1);
    net.add_edge(1, 3);
    net.add_edge(2, 3);
    net.clear_node(1);
    EXPECT_EQ(net.edge_count(), 1u);
    EXPECT_TRUE(net.has_edge(2, 3));
    EXPECT_TRUE(net.followers(1).empty());
    EXPECT_TRUE(net.following(1).empty());
}

TEST(DirectedNetwork, RandomMutationsMatchMatrixModel) {
    Rng rng(11);
    const std::size_t n = 9;
    DirectedNetwork net(n);
    testing::Matrix model(n, std::vector<int>(n, 0));
    for (int iter = 0; iter < 5000; ++iter) {
        const auto u = static_cast<NodeId>(rng.below(n));
        const auto v = static_cast<NodeId>(rng.below(n));
        const auto op = rng.below(10);
        if (op == 0) {
            net.clear_node(u);
            for (std::size_t k = 0; k < n; ++k) model[u][k] = model[k][u] = 0;
        } else if (u != v && op < 6) {
            EXPECT_EQ(net.add_edge(u, v), model[v][u] == 0);
            model[v][u] = 1;
        } else if (u != v) {
            EXPECT_EQ(net.remove_edge(u, v), model[v][u] == 1);
            model[v][u] = 0;
        }
    }
    EXPECT_EQ(testing::to_matrix(net), model);
    std::size_t total = 0;
    for (NodeId v = 0; v < n; ++v) {
        total += net.followers(v).size();
        for (NodeId f : net.followers(v)) EXPECT_TRUE(std::ranges::find(net.following(f), v) != net.following(f).end());
    }
    EXPECT_EQ(total, net.edge_count());
}

TEST(DirectedNetwork, PermutedAndInduced) {
    DirectedNetwork net(3);
    net.add_edge(0, 1);
    net.add_edge(1, 2);
    const std::vector<NodeId> perm{2, 0, 1};
    const auto p = net.permuted(perm);
    EXPECT_TRUE(p.has_edge(2, 0));
    EXPECT_TRUE(p.has_edge(0, 1));
    EXPECT_EQ(p.edge_count(), 2u);

    const std::vector<NodeId> keep{1, 2};
    const auto sub = net.induced(keep);
    EXPECT_EQ(sub.size(), 2u);
    EXPECT_TRUE(sub.has_edge(0, 1));
    EXPECT_EQ(sub.edge_count(), 1u);
}

}  // namespace
}  // namespace repnet
