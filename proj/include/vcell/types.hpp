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

#include <optional>
#include <string_view>

namespace vcell {

enum class AffiliationRule { ClosestBS, BestChannel };

// Per-(user, BS) channel magnitude used by the best-channel rule when there
// is more than one band.
enum class BestChannelScore { BandSum, MaxBand };

enum class ClusteringMethod { Hierarchical, KMeans, Exhaustive };

constexpr std::string_view to_string(AffiliationRule r) {
    return r == AffiliationRule::ClosestBS ? "closest_bs" : "best_channel";
}

constexpr std::string_view to_string(BestChannelScore s) {
    return s == BestChannelScore::BandSum ? "band_sum" : "max_band";
}

constexpr std::string_view to_string(ClusteringMethod m) {
    switch (m) {
    case ClusteringMethod::Hierarchical: return "hierarchical";
    case ClusteringMethod::KMeans: return "kmeans";
    case ClusteringMethod::Exhaustive: return "exhaustive";
    }
    return "?";
}

inline std::optional<AffiliationRule> parse_affiliation_rule(std::string_view s) {
    if (s == "closest_bs") return AffiliationRule::ClosestBS;
    if (s == "best_channel") return AffiliationRule::BestChannel;
    return std::nullopt;
}

inline std::optional<BestChannelScore> parse_best_channel_score(std::string_view s) {
    if (s == "band_sum") return BestChannelScore::BandSum;
    if (s == "max_band") return BestChannelScore::MaxBand;
    return std::nullopt;
}

inline std::optional<ClusteringMethod> parse_clustering_method(std::string_view s) {
    if (s == "hierarchical") return ClusteringMethod::Hierarchical;
    if (s == "kmeans") return ClusteringMethod::KMeans;
    if (s == "exhaustive") return ClusteringMethod::Exhaustive;
    return std::nullopt;
}

}  // namespace vcell
