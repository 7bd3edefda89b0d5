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
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace repnet {

using NodeId = std::uint32_t;

/// A directed "follows" relation: `follower` follows `followed`, i.e. the
/// adjacency entry a[followed][follower] is 1 and reputation flows from the
/// follower to the followed user.
struct Edge {
    NodeId follower;
    NodeId followed;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unweighted directed network over a fixed number of user slots.
///
/// Each node keeps two adjacency lists (the users it follows and its followers)
/// plus a dense slot map giving the position of every edge inside those lists.
/// Insert and erase are O(1), iterating a node's neighbours is O(degree), and
/// all edges of a node can be dropped at once with clear_node(). Self-loops and
/// duplicate edges are rejected.
class DirectedNetwork {
public:
    DirectedNetwork() = default;
    explicit DirectedNetwork(std::size_t n);

    /// Builds a network from an edge list; throws ValidationError on self-loops,
    /// duplicates or out-of-range endpoints.
    static DirectedNetwork from_edges(std::size_t n, std::span<const Edge> edges);

    /// Builds from a square 0/1 matrix in row-major order where entry (i, j) = 1
    /// means j follows i.
    static DirectedNetwork from_adjacency(std::size_t n, std::span<const std::uint8_t> a);

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_; }

    bool has_edge(NodeId follower, NodeId followed) const;

    /// Returns false when the edge already exists. Throws on self-loops or
    /// out-of-range endpoints.
    bool add_edge(NodeId follower, NodeId followed);

    /// Returns false when the edge was absent.
    bool remove_edge(NodeId follower, NodeId followed);

    /// Removes every incoming and outgoing edge of `node`.
    void clear_node(NodeId node);

    /// Users that `node` follows (out-neighbours).
    std::span<const NodeId> following(NodeId node) const { return out_[node]; }

    /// Users following `node` (in-neighbours, the j with a[node][j] = 1).
    std::span<const NodeId> followers(NodeId node) const { return in_[node]; }

    /// All edges sorted by (follower, followed).
    std::vector<Edge> edges() const;

    /// Row-major adjacency matrix, entry (i, j) = 1 iff j follows i.
    std::vector<std::uint8_t> adjacency() const;

    /// Sub-network induced by `nodes`; node k of the result is nodes[k].
    DirectedNetwork induced(std::span<const NodeId> nodes) const;

    /// Relabels node v to perm[v].
    DirectedNetwork permuted(std::span<const NodeId> perm) const;

    friend bool operator==(const DirectedNetwork& a, const DirectedNetwork& b);

private:
    void check_endpoints(NodeId follower, NodeId followed) const;
    std::size_t slot(NodeId follower, NodeId followed) const { return std::size_t{follower} * n_ + followed; }

    std::size_t n_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;
    // For edge (u -> v): out_pos_[u*n+v] = 1 + index of v in out_[u], 0 if absent.
    std::vector<std::uint32_t> out_pos_;
    // For edge (u -> v): in_pos_[u*n+v] = 1 + index of u in in_[v].
    std::vector<std::uint32_t> in_pos_;
};

}  // namespace repnet
