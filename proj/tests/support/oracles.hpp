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

// Independent reference implementations used to cross-check the library.
// They favour obviousness over speed and share no code with it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "repnet/network.hpp"
#include "repnet/rng.hpp"

namespace repnet::testing {

using Matrix = std::vector<std::vector<int>>;  // m[i][j] = 1 iff j follows i

inline Matrix to_matrix(const DirectedNetwork& net) {
    const std::size_t n = net.size();
    Matrix m(n, std::vector<int>(n, 0));
    for (const auto& e : net.edges()) m[e.followed][e.follower] = 1;
    return m;
}

inline DirectedNetwork from_matrix(const Matrix& m) {
    DirectedNetwork net(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j]) net.add_edge(static_cast<NodeId>(j), static_cast<NodeId>(i));
    return net;
}

inline DirectedNetwork random_graph(std::size_t n, double p, Rng& rng) {
    DirectedNetwork net(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && rng.uniform() < p) net.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
    return net;
}

// reach[u][v]: a directed path u -> ... -> v along follow edges exists
// (Floyd-Warshall closure, reflexive).
inline std::vector<std::vector<bool>> reachability(const DirectedNetwork& net) {
    const std::size_t n = net.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
    for (const auto& e : net.edges()) r[e.follower][e.followed] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

// Components as sorted node sets, derived from mutual reachability.
inline std::set<std::vector<NodeId>> components_by_reachability(const DirectedNetwork& net) {
    const auto r = reachability(net);
    std::set<std::vector<NodeId>> out;
    for (std::size_t u = 0; u < net.size(); ++u) {
        std::vector<NodeId> c;
        for (std::size_t v = 0; v < net.size(); ++v)
            if (r[u][v] && r[v][u]) c.push_back(static_cast<NodeId>(v));
        out.insert(c);
    }
    return out;
}

// Weak connectivity via a tiny union-find; isolated users disqualify.
inline bool weakly_connected_without_isolates(const DirectedNetwork& net) {
    const std::size_t n = net.size();
    if (n == 0) return false;
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> touched(n, false);
    for (const auto& e : net.edges()) {
        touched[e.follower] = touched[e.followed] = true;
        parent[find(e.follower)] = find(e.followed);
    }
    if (n > 1 && std::find(touched.begin(), touched.end(), false) != touched.end()) return false;
    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

// Every simple cycle, found by trying all orderings of every node subset
// whose first element is the subset minimum. Exponential; n <= 7 only.
inline std::set<std::vector<NodeId>> brute_force_cycles(const DirectedNetwork& net) {
    const std::size_t n = net.size();
    std::set<std::vector<NodeId>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<NodeId> nodes;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1u << v)) nodes.push_back(static_cast<NodeId>(v));
        if (nodes.size() < 2) continue;
        // nodes[0] is the minimum; permute the rest.
        std::vector<NodeId> rest(nodes.begin() + 1, nodes.end());
        do {
            std::vector<NodeId> cyc{nodes[0]};
            cyc.insert(cyc.end(), rest.begin(), rest.end());
            bool ok = true;
            for (std::size_t k = 0; k < cyc.size() && ok; ++k)
                ok = net.has_edge(cyc[k], cyc[(k + 1) % cyc.size()]);
            if (ok) out.insert(cyc);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

struct DenseEigen {
    std::vector<long double> b;  // max-normalised
    long double lambda1 = 0;
};

// Power method on (I + A) in long double, accelerated by squaring the
// matrix: after k squarings the vector is (I + A)^(2^k) 1, rescaled.
inline DenseEigen dense_power_oracle(const DirectedNetwork& net, int squarings = 64) {
    const std::size_t n = net.size();
    using Row = std::vector<long double>;
    std::vector<Row> m(n, Row(n, 0.0L));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0L;
    for (const auto& e : net.edges()) m[e.followed][e.follower] += 1.0L;
    for (int s = 0; s < squarings; ++s) {
        std::vector<Row> sq(n, Row(n, 0.0L));
        long double mx = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (m[i][k] != 0)
                    for (std::size_t j = 0; j < n; ++j) sq[i][j] += m[i][k] * m[k][j];
        for (const auto& row : sq)
            for (long double v : row) mx = std::max(mx, v);
        for (auto& row : sq)
            for (auto& v : row) v /= mx;
        m = std::move(sq);
    }
    DenseEigen out;
    out.b.assign(n, 0.0L);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.b[i] += m[i][j];
    const long double mx = *std::max_element(out.b.begin(), out.b.end());
    for (auto& v : out.b) v /= mx;
    std::size_t z = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (out.b[i] > out.b[z]) z = i;
    for (NodeId j : net.followers(static_cast<NodeId>(z))) out.lambda1 += out.b[j];
    return out;
}

}  // namespace repnet::testing
