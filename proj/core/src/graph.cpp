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
#include "repnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "repnet/error.hpp"
#include "repnet/reputation.hpp"

namespace repnet {

namespace {

constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

// Iterative Tarjan over the "following" lists.
std::vector<std::vector<NodeId>> tarjan(const DirectedNetwork& net) {
    const std::size_t n = net.size();
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    std::vector<std::vector<NodeId>> components;
    std::size_t counter = 0;

    struct Frame {
        NodeId node;
        std::size_t next;
    };
    std::vector<Frame> call;

    for (NodeId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            Frame& f = call.back();
            const auto succ = net.following(f.node);
            if (f.next < succ.size()) {
                const NodeId w = succ[f.next++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.node] = std::min(low[f.node], index[w]);
                }
                continue;
            }
            const NodeId v = f.node;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().node] = std::min(low[call.back().node], low[v]);
            }
            if (low[v] == index[v]) {
                std::vector<NodeId> comp;
                NodeId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
        }
    }
    return components;
}

}  // namespace

bool CoreAnalysis::in_core(NodeId v) const {
    return std::binary_search(core.begin(), core.end(), v);
}

std::vector<NodeId> CoreAnalysis::periphery(std::size_t n) const {
    std::vector<NodeId> result;
    for (NodeId v = 0; v < n; ++v) {
        if (!in_core(v)) result.push_back(v);
    }
    return result;
}

std::vector<std::size_t> scc_labels(const DirectedNetwork& net) {
    std::vector<std::size_t> label(net.size(), 0);
    const auto comps = tarjan(net);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (NodeId v : comps[c]) label[v] = c;
    }
    return label;
}

CoreAnalysis compute_sccs(const DirectedNetwork& net) {
    CoreAnalysis result;
    result.sccs = tarjan(net);
    result.whole_network_component = is_whole_network(net);

    std::size_t best_size = 0;
    for (const auto& c : result.sccs) best_size = std::max(best_size, c.size());
    if (best_size < 2) return result;

    std::vector<const std::vector<NodeId>*> tied;
    for (const auto& c : result.sccs) {
        if (c.size() == best_size) tied.push_back(&c);
    }
    const std::vector<NodeId>* chosen = tied.front();
    if (tied.size() > 1) {
        // Larger Perron eigenvalue wins; equal eigenvalues fall back to the smallest member.
        constexpr double kEigenTie = 1e-9;
        double best_lambda = -1.0;
        for (const auto* c : tied) {
            const double lambda = perron_eigenvalue(net.induced(*c));
            const bool better = lambda > best_lambda + kEigenTie;
            const bool tie = std::abs(lambda - best_lambda) <= kEigenTie;
            if (better || (tie && c->front() < chosen->front())) {
                if (better) best_lambda = lambda;
                chosen = c;
            }
        }
    }
    result.core = *chosen;
    result.core_size = chosen->size();
    result.is_core_alive = true;
    return result;
}

bool is_whole_network(const DirectedNetwork& net) {
    const std::size_t n = net.size();
    if (n == 0) return false;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = n;
    for (NodeId u = 0; u < n; ++u) {
        if (net.following(u).empty() && net.followers(u).empty()) return false;
        for (NodeId v : net.following(u)) {
            const auto a = find(u), b = find(v);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components == 1;
}

Degrees degrees(const DirectedNetwork& net) {
    Degrees d{std::vector<std::size_t>(net.size()), std::vector<std::size_t>(net.size())};
    for (NodeId v = 0; v < net.size(); ++v) {
        d.in[v] = net.followers(v).size();
        d.out[v] = net.following(v).size();
    }
    return d;
}

namespace {

// State for one Johnson circuit search rooted at `start`, restricted to `allowed`.
class CircuitSearch {
public:
    CircuitSearch(const DirectedNetwork& net, CycleReport& report, std::size_t budget)
        : net_(net), report_(report), budget_(budget), blocked_(net.size(), false), blocked_by_(net.size()) {}

    // Returns false when the budget stopped the search.
    bool run(NodeId start, const std::vector<bool>& allowed) {
        start_ = start;
        allowed_ = &allowed;
        std::fill(blocked_.begin(), blocked_.end(), false);
        for (auto& b : blocked_by_) b.clear();
        path_.clear();
        stopped_ = false;
        circuit(start);
        return !stopped_;
    }

private:
    void unblock(NodeId u) {
        std::vector<NodeId> work{u};
        while (!work.empty()) {
            const NodeId x = work.back();
            work.pop_back();
            if (!blocked_[x]) continue;
            blocked_[x] = false;
            for (NodeId w : blocked_by_[x]) work.push_back(w);
            blocked_by_[x].clear();
        }
    }

    bool circuit(NodeId v) {
        bool found = false;
        path_.push_back(v);
        blocked_[v] = true;
        for (NodeId w : net_.following(v)) {
            if (stopped_) break;
            if (!(*allowed_)[w]) continue;
            if (w == start_) {
                if (report_.cycles.size() >= budget_) {
                    report_.truncated = true;
                    stopped_ = true;
                    break;
                }
                report_.cycles.push_back(path_);
                found = true;
            } else if (!blocked_[w]) {
                if (circuit(w)) found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (NodeId w : net_.following(v)) {
                if (!(*allowed_)[w]) continue;
                auto& list = blocked_by_[w];
                if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
            }
        }
        path_.pop_back();
        return found;
    }

    const DirectedNetwork& net_;
    CycleReport& report_;
    std::size_t budget_;
    std::vector<bool> blocked_;
    std::vector<std::vector<NodeId>> blocked_by_;
    std::vector<NodeId> path_;
    const std::vector<bool>* allowed_ = nullptr;
    NodeId start_ = 0;
    bool stopped_ = false;
};

}  // namespace

CycleReport enumerate_cycles(const DirectedNetwork& net, std::size_t max_nodes, std::size_t budget) {
    const std::size_t n = net.size();
    if (n > max_nodes) {
        throw TooLargeError("network too large for exact enumeration: " + std::to_string(n) + " nodes > " +
                            std::to_string(max_nodes));
    }
    CycleReport report;
    CircuitSearch search(net, report, budget);
    for (NodeId start = 0; start < n; ++start) {
        // Johnson restricts each round to the strongly connected component of
        // `start` inside the sub-network induced by nodes >= start.
        std::vector<NodeId> rest;
        for (NodeId v = start; v < n; ++v) rest.push_back(v);
        const auto sub = net.induced(rest);
        const auto label = scc_labels(sub);
        std::vector<bool> allowed(n, false);
        std::size_t members = 0;
        for (std::size_t k = 0; k < rest.size(); ++k) {
            if (label[k] == label[0]) {
                allowed[rest[k]] = true;
                ++members;
            }
        }
        if (members < 2) continue;
        if (!search.run(start, allowed)) break;
    }
    for (const auto& c : report.cycles) ++report.count_by_length[c.size()];
    return report;
}

}  // namespace repnet
