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

#include "vcell/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "vcell/config.hpp"
#include "vcell/errors.hpp"
#include "vcell/evaluation.hpp"

namespace vcell::cli {

namespace {

using nlohmann::json;

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

SimulationConfig resolve(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
    json doc = read_json_file(path);
    for (const auto& o : overrides) apply_override(doc, o);
    return config_from_json(doc);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << contents;
}

}  // namespace

std::size_t workers_from_env() {
    if (const char* v = std::getenv(kWorkersEnv)) {
        char* end = nullptr;
        const unsigned long n = std::strtoul(v, &end, 10);
        if (end != v && *end == '\0' && n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_validate(const std::filesystem::path& config_path, const std::vector<std::string>& overrides,
                 std::ostream& out, std::ostream& err) {
    try {
        const SimulationConfig cfg = resolve(config_path, overrides);
        json doc = config_to_json(cfg);
        doc["derived"] = {{"noise_power_mw_per_band", cfg.noise_power_mw()},
                          {"power_budget_mw", cfg.power_budget_mw()}};
        out << doc.dump(2) << '\n';
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kExitBadConfig;
    }
}

int cmd_run(const RunRequest& req, std::ostream& out, std::ostream& err) {
    SimulationConfig cfg;
    try {
        cfg = resolve(req.config_path, req.overrides);
    } catch (const ConfigError& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kExitBadConfig;
    }

    std::vector<NetworkResult> rows;
    try {
        SweepOptions opts;
        opts.workers = req.workers;
        rows = run_sweep(cfg, req.methods, req.rules, opts);
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception& e) {
        err << "sweep failed: " << e.what() << '\n';
        return kExitFailure;
    }

    try {
        std::filesystem::create_directories(req.output_dir);

        std::ostringstream raw, jsonl, agg;
        write_raw_csv(raw, rows);
        write_raw_jsonl(jsonl, rows);
        const auto summary = aggregate(rows);
        write_aggregate_csv(agg, summary);

        json methods = json::array(), rules = json::array();
        for (auto m : req.methods) methods.push_back(to_string(m));
        for (auto r : req.rules) rules.push_back(to_string(r));
        const json manifest = {
            {"config_path", req.config_path.string()},
            {"output_dir", req.output_dir.string()},
            {"methods", methods},
            {"rules", rules},
            {"overrides", req.overrides},
            {"timestamp", utc_timestamp()},
            {"master_seed", cfg.master_seed},
            {"workers", req.workers},
            {"num_rows", rows.size()},
        };

        write_file(req.output_dir / "raw.csv", raw.str());
        write_file(req.output_dir / "raw.jsonl", jsonl.str());
        write_file(req.output_dir / "aggregate.csv", agg.str());
        write_file(req.output_dir / "config.json", config_to_json(cfg).dump(2) + "\n");
        write_file(req.output_dir / "manifest.json", manifest.dump(2) + "\n");
    } catch (const std::exception& e) {
        err << "cannot write results: " << e.what() << '\n';
        return kExitFailure;
    }

    out << "wrote " << rows.size() << " rows to " << req.output_dir.string() << '\n';
    return kExitOk;
}

}  // namespace vcell::cli
