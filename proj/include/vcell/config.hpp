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

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "json.hpp"

#include "vcell/types.hpp"

namespace vcell {

/**
 * Parameters of one Monte Carlo experiment.
 *
 * Defaults describe a 2 km square with 6 base stations and 50 users sharing
 * 10 bands of 20 kHz each, with 35 log10(d) + 34 path loss and 8 dB
 * log-normal shadowing. JSON field names match the member names.
 */
struct SimulationConfig {
    std::uint64_t num_bs = 6;
    std::uint64_t num_users = 50;
    double side_length = 2000.0;          // meters
    std::uint64_t num_bands = 10;
    double band_width = 20e3;             // Hz per band
    double noise_psd_dbm_hz = -174.0;
    double power_budget_dbm = 23.0;       // per user
    double pathloss_a = 35.0;             // dB per decade of distance
    double pathloss_b = 34.0;             // dB
    double shadowing_sigma_db = 8.0;
    std::uint64_t num_realizations = 500;
    std::uint64_t master_seed = 1;

    // Stored for reference; the path-loss constants already absorb it.
    double carrier_frequency_mhz = 1800.0;
    // false: one shadowing draw per (user, BS) shared by all bands.
    bool shadowing_per_band = false;
    BestChannelScore best_channel_score = BestChannelScore::BandSum;
    std::uint64_t enumeration_cap = 10;
    double solver_tol = 1e-8;
    std::uint64_t solver_max_rounds = 200;

    double noise_power_mw() const;   // per band
    double power_budget_mw() const;  // per user

    friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

// Throws ConfigError naming the first offending field.
void validate(const SimulationConfig& cfg);

// Missing keys keep their defaults; unknown keys and wrong types are errors.
SimulationConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const SimulationConfig& cfg);

nlohmann::json read_json_file(const std::filesystem::path& path);
SimulationConfig load_config(const std::filesystem::path& path);

// Applies "a.b.c=value" to doc. The value is parsed as JSON when possible,
// otherwise stored as a string.
void apply_override(nlohmann::json& doc, std::string_view assignment);

}  // namespace vcell
