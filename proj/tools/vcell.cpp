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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vcell/cli.hpp"
#include "vcell/types.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Virtual cell clustering and joint-decoding power allocation sweeps"};
    app.require_subcommand(1);

    vcell::cli::RunRequest req;
    std::vector<std::string> method_names{"hierarchical", "kmeans", "exhaustive"};
    std::vector<std::string> rule_names{"closest_bs", "best_channel"};

    auto* run = app.add_subcommand("run", "Run a Monte Carlo sweep and write result tables");
    run->add_option("--config", req.config_path, "Configuration JSON")->required();
    run->add_option("--out", req.output_dir, "Output directory (created if absent)")->required();
    run->add_option("--set", req.overrides, "Override a config field, key=value (repeatable)");
    run->add_option("--methods", method_names, "Clustering methods")
        ->delimiter(',')
        ->check(CLI::IsMember({"hierarchical", "kmeans", "exhaustive"}));
    run->add_option("--rules", rule_names, "Affiliation rules")
        ->delimiter(',')
        ->check(CLI::IsMember({"closest_bs", "best_channel"}));

    std::string validate_path;
    std::vector<std::string> validate_overrides;
    auto* validate = app.add_subcommand("validate", "Check a configuration and print it resolved");
    validate->add_option("--config", validate_path, "Configuration JSON")->required();
    validate->add_option("--set", validate_overrides, "Override a config field, key=value (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (*validate) return vcell::cli::cmd_validate(validate_path, validate_overrides, std::cout, std::cerr);

    req.methods.clear();
    for (const auto& m : method_names) req.methods.push_back(*vcell::parse_clustering_method(m));
    req.rules.clear();
    for (const auto& r : rule_names) req.rules.push_back(*vcell::parse_affiliation_rule(r));
    req.workers = vcell::cli::workers_from_env();
    return vcell::cli::cmd_run(req, std::cout, std::cerr);
}
