// Copyright 2026 The ppfix Authors
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

// GridFunction serialization.
//
// JSON: {"interval": {"a": 0, "b": 1, "n": 11}, "dim": 1, "values": [[0], ...]}
// CSV:  one row per node, "t,v1,...,vm", with an optional header row.

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "ppfix/fspace/grid_function.hpp"

namespace ppfix::fspace {

nlohmann::json to_json(const Interval& interval);
Interval interval_from_json(const nlohmann::json& doc);

/// Parses "a,b,n".
Interval parse_interval(std::string_view text);

nlohmann::json to_json(const GridFunction& phi);
GridFunction grid_function_from_json(const nlohmann::json& doc);

std::string to_csv(const GridFunction& phi);
/// The grid is recovered from the t column, which must be uniform.
GridFunction grid_function_from_csv(std::string_view text);

/// Reads a .csv file as CSV and anything else as JSON.
GridFunction load_grid_function(const std::string& path);

}  // namespace ppfix::fspace
