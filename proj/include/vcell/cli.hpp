// SPDX-License-Identifier: Apache-2.0
//
// vcell - virtual cell clustering and uplink power allocation
// Copyright (C) 2026 The vcell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vcell/types.hpp"

namespace vcell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadConfig = 2;
inline constexpr int kExitCapacity = 3;

// Worker count read from this environment variable; defaults to the number
// of hardware threads.
inline constexpr const char* kWorkersEnv = "VCELL_WORKERS";

struct RunRequest {
    std::filesystem::path config_path;
    std::filesystem::path output_dir;
    std::vector<std::string> overrides;  // dotted.key=value
    std::vector<ClusteringMethod> methods{ClusteringMethod::Hierarchical, ClusteringMethod::KMeans,
                                          ClusteringMethod::Exhaustive};
    std::vector<AffiliationRule> rules{AffiliationRule::ClosestBS, AffiliationRule::BestChannel};
    std::size_t workers = 1;
};

std::size_t workers_from_env();

/**
 * Runs a sweep and writes, under output_dir:
 *   raw.csv, raw.jsonl       one row per (realization, method, rule, m)
 *   aggregate.csv            mean and standard error per (method, rule, m)
 *   config.json              the resolved configuration
 *   manifest.json            inputs, overrides, seed, timestamp
 * Nothing is written unless the sweep completes.
 */
int cmd_run(const RunRequest& req, std::ostream& out, std::ostream& err);

// Checks the configuration and prints it fully resolved, with derived
// per-band noise power and per-user budget in mW.
int cmd_validate(const std::filesystem::path& config_path, const std::vector<std::string>& overrides,
                 std::ostream& out, std::ostream& err);

}  // namespace vcell::cli
