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
#include <map>
#include <vector>

#include "repnet/network.hpp"

namespace repnet {

/// Strongly connected structure of a network snapshot.
///
/// The core is the largest strongly connected component. A core only exists
/// when that component contains at least two users (a singleton cannot sit on
/// a cycle), otherwise `core` is empty and `core_size` is zero.
struct CoreAnalysis {
    std::vector<std::vector<NodeId>> sccs;  // each component sorted ascending
    std::vector<NodeId> core;               // sorted ascending
    std::size_t core_size = 0;
    bool is_core_alive = false;
    bool whole_network_component = false;

    bool in_core(NodeId v) const;
    std::vector<NodeId> periphery(std::size_t n) const;
};

/// Tarjan SCCs plus core selection. Ties on component size go to the larger
/// Perron eigenvalue of the induced sub-network, then to the smallest member id.
CoreAnalysis compute_sccs(const DirectedNetwork& net);

/// Component id per node; components numbered in reverse topological order of
/// the condensation (Tarjan completion order).
std::vector<std::size_t> scc_labels(const DirectedNetwork& net);

/// True iff the undirected shadow is one connected component covering every
/// node and no node is isolated.
bool is_whole_network(const DirectedNetwork& net);

struct Degrees {
    std::vector<std::size_t> in;   // followers per user
    std::vector<std::size_t> out;  // users followed
};

Degrees degrees(const DirectedNetwork& net);

struct CycleReport {
    /// Each cycle starts at its smallest node and follows edge direction
    /// (follower -> followed); the closing edge back to the start is implicit.
    std::vector<std::vector<NodeId>> cycles;
    std::map<std::size_t, std::size_t> count_by_length;
    bool truncated = false;
};

inline constexpr std::size_t kDefaultCycleMaxNodes = 64;
inline constexpr std::size_t kDefaultCycleBudget = 100000;

/// Johnson's elementary circuit enumeration. Throws TooLargeError when the
/// network has more than `max_nodes` nodes; stops and sets `truncated` once
/// `budget` cycles have been found and another one exists.
CycleReport enumerate_cycles(const DirectedNetwork& net, std::size_t max_nodes = kDefaultCycleMaxNodes,
                             std::size_t budget = kDefaultCycleBudget);

}  // namespace repnet
