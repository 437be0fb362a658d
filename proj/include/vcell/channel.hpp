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

#include <complex>
#include <cstddef>
#include <vector>

#include "vcell/config.hpp"
#include "vcell/geometry.hpp"

namespace vcell {

struct Topology {
    std::vector<Point2> bs_positions;
    std::vector<Point2> user_positions;
    std::vector<double> power_budgets_mw;

    std::size_t num_bs() const { return bs_positions.size(); }
    std::size_t num_users() const { return user_positions.size(); }

    friend bool operator==(const Topology&, const Topology&) = default;
};

/// Complex gains h(u, b, k) from user u to base station b on band k, with the
/// per-band receiver noise power (white, identical at every BS) and bandwidth.
class ChannelTensor {
public:
    ChannelTensor() = default;
    ChannelTensor(std::size_t num_users, std::size_t num_bs, std::vector<double> noise_power_mw,
                  std::vector<double> band_widths_hz);

    std::size_t num_users() const { return num_users_; }
    std::size_t num_bs() const { return num_bs_; }
    std::size_t num_bands() const { return noise_power_mw_.size(); }

    std::complex<double>& h(std::size_t u, std::size_t b, std::size_t k) {
        return coeffs_[(u * num_bs_ + b) * num_bands() + k];
    }
    const std::complex<double>& h(std::size_t u, std::size_t b, std::size_t k) const {
        return coeffs_[(u * num_bs_ + b) * num_bands() + k];
    }

    double noise_power_mw(std::size_t k) const { return noise_power_mw_[k]; }
    double band_width_hz(std::size_t k) const { return band_widths_hz_[k]; }
    const std::vector<double>& noise_powers_mw() const { return noise_power_mw_; }
    const std::vector<double>& band_widths_hz() const { return band_widths_hz_; }

    friend bool operator==(const ChannelTensor&, const ChannelTensor&) = default;

private:
    std::size_t num_users_ = 0;
    std::size_t num_bs_ = 0;
    std::vector<double> noise_power_mw_;
    std::vector<double> band_widths_hz_;
    std::vector<std::complex<double>> coeffs_;
};

// Path loss in dB at distance d meters: a * log10(d) + b. Throws
// std::domain_error for d <= 0.
double pathloss_db(double d, double a = 35.0, double b = 34.0);

// BS and user positions uniform on [0, side_length]^2; every budget equals
// power_budget_dbm converted to mW. Pure in (cfg, realization_index).
Topology generate_topology(const SimulationConfig& cfg, std::size_t realization_index);

/**
 * Draws one channel realization for `topo`.
 *
 * h(u,b,k) = sqrt(10^((-PL(d_ub) + S_ub) / 10)) * g_ubk with S_ub ~ N(0, sigma^2)
 * in dB (one draw per (u,b) unless shadowing_per_band is set) and g_ubk
 * circularly-symmetric complex Gaussian with unit variance, independent per
 * band. Distances below 1 m are clamped to 1 m.
 */
ChannelTensor generate_channels(const SimulationConfig& cfg, const Topology& topo,
                                std::size_t realization_index);

}  // namespace vcell
