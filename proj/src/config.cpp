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

#include "vcell/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <string>

#include "vcell/errors.hpp"
#include "vcell/units.hpp"

namespace vcell {

using nlohmann::json;

double SimulationConfig::noise_power_mw() const {
    return units::dbm_to_mw(noise_psd_dbm_hz) * band_width;
}

double SimulationConfig::power_budget_mw() const {
    return units::dbm_to_mw(power_budget_dbm);
}

namespace {

void require(bool ok, const char* field, const char* what) {
    if (!ok) throw ConfigError(field, what);
}

bool finite(double v) { return std::isfinite(v); }

std::uint64_t as_count(const json& v, const std::string& key) {
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw ConfigError(key, "expected a nonnegative integer");
    return v.get<std::uint64_t>();
}

double as_real(const json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError(key, "expected a number");
    return v.get<double>();
}

using Setter = std::function<void(SimulationConfig&, const json&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"num_bs", [](auto& c, const json& v, const auto& k) { c.num_bs = as_count(v, k); }},
        {"num_users", [](auto& c, const json& v, const auto& k) { c.num_users = as_count(v, k); }},
        {"side_length", [](auto& c, const json& v, const auto& k) { c.side_length = as_real(v, k); }},
        {"num_bands", [](auto& c, const json& v, const auto& k) { c.num_bands = as_count(v, k); }},
        {"band_width", [](auto& c, const json& v, const auto& k) { c.band_width = as_real(v, k); }},
        {"noise_psd_dbm_hz", [](auto& c, const json& v, const auto& k) { c.noise_psd_dbm_hz = as_real(v, k); }},
        {"power_budget_dbm", [](auto& c, const json& v, const auto& k) { c.power_budget_dbm = as_real(v, k); }},
        {"pathloss_a", [](auto& c, const json& v, const auto& k) { c.pathloss_a = as_real(v, k); }},
        {"pathloss_b", [](auto& c, const json& v, const auto& k) { c.pathloss_b = as_real(v, k); }},
        {"shadowing_sigma_db", [](auto& c, const json& v, const auto& k) { c.shadowing_sigma_db = as_real(v, k); }},
        {"num_realizations", [](auto& c, const json& v, const auto& k) { c.num_realizations = as_count(v, k); }},
        {"master_seed", [](auto& c, const json& v, const auto& k) { c.master_seed = as_count(v, k); }},
        {"carrier_frequency_mhz", [](auto& c, const json& v, const auto& k) { c.carrier_frequency_mhz = as_real(v, k); }},
        {"shadowing_per_band",
         [](auto& c, const json& v, const auto& k) {
             if (!v.is_boolean()) throw ConfigError(k, "expected true or false");
             c.shadowing_per_band = v.get<bool>();
         }},
        {"best_channel_score",
         [](auto& c, const json& v, const auto& k) {
             auto parsed = v.is_string() ? parse_best_channel_score(v.get<std::string>()) : std::nullopt;
             if (!parsed) throw ConfigError(k, "expected \"band_sum\" or \"max_band\"");
             c.best_channel_score = *parsed;
         }},
        {"enumeration_cap", [](auto& c, const json& v, const auto& k) { c.enumeration_cap = as_count(v, k); }},
        {"solver_tol", [](auto& c, const json& v, const auto& k) { c.solver_tol = as_real(v, k); }},
        {"solver_max_rounds", [](auto& c, const json& v, const auto& k) { c.solver_max_rounds = as_count(v, k); }},
    };
    return table;
}

}  // namespace

void validate(const SimulationConfig& c) {
    require(c.num_bs >= 1, "num_bs", "must be at least 1");
    require(c.num_users >= 1, "num_users", "must be at least 1");
    require(finite(c.side_length) && c.side_length > 0, "side_length", "must be positive");
    require(c.num_bands >= 1, "num_bands", "must be at least 1");
    require(finite(c.band_width) && c.band_width > 0, "band_width", "must be positive");
    require(finite(c.noise_psd_dbm_hz), "noise_psd_dbm_hz", "must be finite");
    require(finite(c.power_budget_dbm), "power_budget_dbm", "must be finite");
    require(finite(c.pathloss_a), "pathloss_a", "must be finite");
    require(finite(c.pathloss_b), "pathloss_b", "must be finite");
    require(finite(c.shadowing_sigma_db) && c.shadowing_sigma_db >= 0, "shadowing_sigma_db",
            "must be nonnegative");
    require(c.num_realizations >= 1, "num_realizations", "must be at least 1");
    require(finite(c.carrier_frequency_mhz) && c.carrier_frequency_mhz > 0, "carrier_frequency_mhz",
            "must be positive");
    require(c.enumeration_cap >= 1, "enumeration_cap", "must be at least 1");
    require(finite(c.solver_tol) && c.solver_tol > 0, "solver_tol", "must be positive");
    require(c.solver_max_rounds >= 1, "solver_max_rounds", "must be at least 1");
}

SimulationConfig config_from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config", "top level must be a JSON object");
    SimulationConfig cfg;
    const auto& table = setters();
    for (const auto& [key, value] : doc.items()) {
        auto it = table.find(key);
        if (it == table.end()) throw ConfigError(key, "unknown configuration key");
        it->second(cfg, value, key);
    }
    validate(cfg);
    return cfg;
}

json config_to_json(const SimulationConfig& c) {
    return json{
        {"num_bs", c.num_bs},
        {"num_users", c.num_users},
        {"side_length", c.side_length},
        {"num_bands", c.num_bands},
        {"band_width", c.band_width},
        {"noise_psd_dbm_hz", c.noise_psd_dbm_hz},
        {"power_budget_dbm", c.power_budget_dbm},
        {"pathloss_a", c.pathloss_a},
        {"pathloss_b", c.pathloss_b},
        {"shadowing_sigma_db", c.shadowing_sigma_db},
        {"num_realizations", c.num_realizations},
        {"master_seed", c.master_seed},
        {"carrier_frequency_mhz", c.carrier_frequency_mhz},
        {"shadowing_per_band", c.shadowing_per_band},
        {"best_channel_score", std::string(to_string(c.best_channel_score))},
        {"enumeration_cap", c.enumeration_cap},
        {"solver_tol", c.solver_tol},
        {"solver_max_rounds", c.solver_max_rounds},
    };
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }
}

SimulationConfig load_config(const std::filesystem::path& path) {
    return config_from_json(read_json_file(path));
}

void apply_override(json& doc, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError("--set", "expected key=value, got '" + std::string(assignment) + "'");
    const std::string key(assignment.substr(0, eq));
    const std::string raw(assignment.substr(eq + 1));

    std::string pointer;
    std::size_t start = 0;
    while (start <= key.size()) {
        const auto dot = key.find('.', start);
        const auto part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty()) throw ConfigError(key, "empty component in dotted key");
        pointer += "/" + part;
        if (dot == std::string::npos) break;
        start = dot + 1;
    }

    json value = json::parse(raw, nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) value = raw;
    doc[json::json_pointer(pointer)] = std::move(value);
}

}  // namespace vcell
