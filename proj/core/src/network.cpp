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
#include "repnet/network.hpp"

#include <algorithm>
#include <string>

#include "repnet/error.hpp"

namespace repnet {

DirectedNetwork::DirectedNetwork(std::size_t n)
    : n_(n), out_(n), in_(n), out_pos_(n * n, 0), in_pos_(n * n, 0) {}

DirectedNetwork DirectedNetwork::from_edges(std::size_t n, std::span<const Edge> edges) {
    DirectedNetwork net(n);
    for (const Edge& e : edges) {
        if (!net.add_edge(e.follower, e.followed)) {
            throw ValidationError("duplicate edge " + std::to_string(e.follower) + " -> " +
                                  std::to_string(e.followed));
        }
    }
    return net;
}

DirectedNetwork DirectedNetwork::from_adjacency(std::size_t n, std::span<const std::uint8_t> a) {
    if (a.size() != n * n) {
        throw ValidationError("adjacency matrix must have n*n entries");
    }
    DirectedNetwork net(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto v = a[i * n + j];
            if (v > 1) {
                throw ValidationError("adjacency entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") is not 0/1");
            }
            if (v == 1) net.add_edge(static_cast<NodeId>(j), static_cast<NodeId>(i));
        }
    }
    return net;
}

void DirectedNetwork::check_endpoints(NodeId follower, NodeId followed) const {
    if (follower >= n_ || followed >= n_) {
        throw ValidationError("edge endpoint out of range: " + std::to_string(follower) + " -> " +
                              std::to_string(followed) + " (n = " + std::to_string(n_) + ")");
    }
    if (follower == followed) {
        throw ValidationError("self-loop on node " + std::to_string(follower));
    }
}

bool DirectedNetwork::has_edge(NodeId follower, NodeId followed) const {
    if (follower >= n_ || followed >= n_) return false;
    return out_pos_[slot(follower, followed)] != 0;
}

bool DirectedNetwork::add_edge(NodeId follower, NodeId followed) {
    check_endpoints(follower, followed);
    const auto s = slot(follower, followed);
    if (out_pos_[s] != 0) return false;
    out_[follower].push_back(followed);
    out_pos_[s] = static_cast<std::uint32_t>(out_[follower].size());
    in_[followed].push_back(follower);
    in_pos_[s] = static_cast<std::uint32_t>(in_[followed].size());
    ++edges_;
    return true;
}

bool DirectedNetwork::remove_edge(NodeId follower, NodeId followed) {
    if (follower >= n_ || followed >= n_) return false;
    const auto s = slot(follower, followed);
    if (out_pos_[s] == 0) return false;

    // Swap-remove from both lists, then patch the slot of the element that moved.
    auto& outs = out_[follower];
    const std::size_t oi = out_pos_[s] - 1;
    const NodeId moved_out = outs.back();
    outs[oi] = moved_out;
    outs.pop_back();
    out_pos_[slot(follower, moved_out)] = static_cast<std::uint32_t>(oi + 1);
    out_pos_[s] = 0;

    auto& ins = in_[followed];
    const std::size_t ii = in_pos_[s] - 1;
    const NodeId moved_in = ins.back();
    ins[ii] = moved_in;
    ins.pop_back();
    in_pos_[slot(moved_in, followed)] = static_cast<std::uint32_t>(ii + 1);
    in_pos_[s] = 0;

    --edges_;
    return true;
}

void DirectedNetwork::clear_node(NodeId node) {
    while (!out_[node].empty()) remove_edge(node, out_[node].back());
    while (!in_[node].empty()) remove_edge(in_[node].back(), node);
}

std::vector<Edge> DirectedNetwork::edges() const {
    std::vector<Edge> result;
    result.reserve(edges_);
    for (NodeId u = 0; u < n_; ++u) {
        for (NodeId v : out_[u]) result.push_back({u, v});
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::uint8_t> DirectedNetwork::adjacency() const {
    std::vector<std::uint8_t> a(n_ * n_, 0);
    for (NodeId u = 0; u < n_; ++u) {
        for (NodeId v : out_[u]) a[std::size_t{v} * n_ + u] = 1;
    }
    return a;
}

DirectedNetwork DirectedNetwork::induced(std::span<const NodeId> nodes) const {
    std::vector<std::int64_t> index(n_, -1);
    for (std::size_t k = 0; k < nodes.size(); ++k) index[nodes[k]] = static_cast<std::int64_t>(k);
    DirectedNetwork sub(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        for (NodeId v : out_[nodes[k]]) {
            if (index[v] >= 0) sub.add_edge(static_cast<NodeId>(k), static_cast<NodeId>(index[v]));
        }
    }
    return sub;
}

DirectedNetwork DirectedNetwork::permuted(std::span<const NodeId> perm) const {
    if (perm.size() != n_) throw ValidationError("permutation size mismatch");
    DirectedNetwork result(n_);
    for (const Edge& e : edges()) result.add_edge(perm[e.follower], perm[e.followed]);
    return result;
}

bool operator==(const DirectedNetwork& a, const DirectedNetwork& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.out_pos_.size() == b.out_pos_.size() &&
           std::equal(a.out_pos_.begin(), a.out_pos_.end(), b.out_pos_.begin(),
                      [](std::uint32_t x, std::uint32_t y) { return (x != 0) == (y != 0); });
}

}  // namespace repnet
