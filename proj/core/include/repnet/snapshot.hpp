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

#include <string>
#include <string_view>

#include "repnet/graph.hpp"
#include "repnet/network.hpp"
#include "repnet/reputation.hpp"

namespace repnet {

enum class SnapshotFormat { Dot, Json };

/// "dot" or "json"; anything else throws ValidationError.
SnapshotFormat parse_snapshot_format(std::string_view name);

/// Renders a network snapshot.
///
/// DOT: one statement per directed edge (follower -> followed); core nodes
/// carry `core=true` and a filled style; every node label shows its id and
/// b with two decimals.
///
/// JSON: {"n", "edges": [[follower, followed], ...], "core": [...],
/// "b": [...], "lambda1": x}. Node ids are 0-based in both formats.
/// An empty network (n = 0) yields a valid, empty document; `eq` may then be
/// default-constructed.
std::string export_snapshot(const DirectedNetwork& net, const CoreAnalysis& analysis, const EquilibriumResult& eq,
                            SnapshotFormat format);

/// Rebuilds the network from a JSON snapshot (only "n" and "edges" are read).
/// Throws ParseError on malformed documents.
DirectedNetwork import_snapshot_json(std::string_view text);

}  // namespace repnet
