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

#include "vcell/channel.hpp"

#include <cmath>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>

#include "vcell/errors.hpp"
#include "vcell/seeding.hpp"
#include "vcell/units.hpp"

namespace vcell {

ChannelTensor::ChannelTensor(std::size_t num_users, std::size_t num_bs,
                             std::vector<double> noise_power_mw, std::vector<double> band_widths_hz)
    : num_users_(num_users),
      num_bs_(num_bs),
      noise_power_mw_(std::move(noise_power_mw)),
      band_widths_hz_(std::move(band_widths_hz)) {
    if (noise_power_mw_.size() != band_widths_hz_.size())
        throw UsageError("ChannelTensor: noise and bandwidth vectors differ in length");
    for (double n : noise_power_mw_)
        if (!(n > 0)) throw UsageError("ChannelTensor: noise power must be positive");
    coeffs_.assign(num_users_ * num_bs_ * noise_power_mw_.size(), {0.0, 0.0});
}

double pathloss_db(double d, double a, double b) {
    if (!(d > 0)) throw std::domain_error("pathloss_db: distance must be positive, got " + std::to_string(d));
    return a * std::log10(d) + b;
}

Topology generate_topology(const SimulationConfig& cfg, std::size_t realization_index) {
    if (realization_index >= cfg.num_realizations)
        throw UsageError("generate_topology: realization index out of range");

    std::mt19937_64 rng(derive_seed(cfg.master_seed, StreamTag::Topology, realization_index));
    std::uniform_real_distribution<double> coord(0.0, cfg.side_length);

    Topology topo;
    topo.bs_positions.reserve(cfg.num_bs);
    for (std::size_t b = 0; b < cfg.num_bs; ++b) {
        const double x = coord(rng);
        const double y = coord(rng);
        topo.bs_positions.push_back({x, y});
    }
    topo.user_positions.reserve(cfg.num_users);
    for (std::size_t u = 0; u < cfg.num_users; ++u) {
        const double x = coord(rng);
        const double y = coord(rng);
        topo.user_positions.push_back({x, y});
    }
    topo.power_budgets_mw.assign(cfg.num_users, cfg.power_budget_mw());
    return topo;
}

ChannelTensor generate_channels(const SimulationConfig& cfg, const Topology& topo,
                                std::size_t realization_index) {
    const std::size_t U = topo.num_users();
    const std::size_t B = topo.num_bs();
    const std::size_t K = cfg.num_bands;
    if (U != cfg.num_users || B != cfg.num_bs)
        throw UsageError("generate_channels: topology does not match configuration");

    ChannelTensor ch(U, B, std::vector<double>(K, cfg.noise_power_mw()),
                     std::vector<double>(K, cfg.band_width));

    std::mt19937_64 shadow_rng(derive_seed(cfg.master_seed, StreamTag::Shadowing, realization_index));
    std::mt19937_64 fading_rng(derive_seed(cfg.master_seed, StreamTag::Fading, realization_index));
    std::normal_distribution<double> shadow(0.0, cfg.shadowing_sigma_db);
    std::normal_distribution<double> component(0.0, std::sqrt(0.5));

    auto draw_shadow = [&]() { return cfg.shadowing_sigma_db > 0 ? shadow(shadow_rng) : 0.0; };

    for (std::size_t u = 0; u < U; ++u) {
        for (std::size_t b = 0; b < B; ++b) {
            double d = distance(topo.user_positions[u], topo.bs_positions[b]);
            if (d < 1.0) {
                std::clog << "warning: user " << u << " within " << d << " m of BS " << b
                          << ", clamping distance to 1 m\n";
                d = 1.0;
            }
            const double pl = pathloss_db(d, cfg.pathloss_a, cfg.pathloss_b);
            const double site_shadow = cfg.shadowing_per_band ? 0.0 : draw_shadow();
            for (std::size_t k = 0; k < K; ++k) {
                const double s = cfg.shadowing_per_band ? draw_shadow() : site_shadow;
                const double amplitude = std::sqrt(units::db_to_linear(-pl + s));
                const double re = component(fading_rng);
                const double im = component(fading_rng);
                ch.h(u, b, k) = amplitude * std::complex<double>(re, im);
            }
        }
    }
    return ch;
}

}  // namespace vcell
