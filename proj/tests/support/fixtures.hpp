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

#include <filesystem>
#include <string>

#include "repnet/io.hpp"
#include "repnet/network.hpp"

namespace repnet::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
    return std::filesystem::path(REPNET_FIXTURE_DIR) / name;
}

inline DirectedNetwork load_matrix(const std::string& name) {
    return parse_adjacency_matrix(read_file(fixture_path(name)));
}

}  // namespace repnet::testing
