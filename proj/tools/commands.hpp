// Copyright 2026 The maxkcut Authors
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
#include <iosfwd>
#include <string>
#include <vector>

namespace maxkcut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the default output directory.
inline constexpr const char *kOutDirEnv = "MAXKCUT_OUT_DIR";

/// Relative paths are placed under $MAXKCUT_OUT_DIR when it is set.
[[nodiscard]] std::filesystem::path resolve_output(const std::string &path);

struct CheckResult {
    std::string scope;
    std::string name;
    double deviation = 0.0;
    bool passed = false;
    std::string detail;
};

[[nodiscard]] std::vector<CheckResult> validate_separators();
[[nodiscard]] std::vector<CheckResult> validate_mixers();
[[nodiscard]] std::vector<CheckResult> validate_preps();

/// Full command line, argv[0] included. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace maxkcut::cli
