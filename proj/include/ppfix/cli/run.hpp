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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppfix::cli {

/// Entry point of the `ppfix` tool:
///
///   ppfix solve {banach|svv|ppf-constant|ppf-existential|aks|blr-bounds} ...
///   ppfix check {razumikhin|aclosed-witness} ...
///   ppfix run SCENARIO.json... [--jobs N]
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Write through a temporary file and rename, so readers never observe a
/// partial report. Throws IoError.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace ppfix::cli
