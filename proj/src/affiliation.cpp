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

#include "vcell/affiliation.hpp"

#include <algorithm>
#include <limits>

#include "vcell/errors.hpp"

namespace vcell {

Partition VirtualCellPartition::bs_partition() const {
    Partition p;
    p.reserve(cells.size());
    for (const auto& c : cells) p.push_back(c.bs_block);
    return p;
}

bool is_proper_clustering(const VirtualCellPartition& vc, std::size_t num_bs, std::size_t num_users) {
    Partition users;
    for (const auto& c : vc.cells)
        if (!c.user_block.empty()) users.push_back(c.user_block);
    return is_partition_of(vc.bs_partition(), num_bs) && is_partition_of(users, num_users);
}

std::vector<std::size_t> affiliated_bs(const Topology& topo, const ChannelTensor& channels,
                                       AffiliationRule rule, BestChannelScore score) {
    const std::size_t U = topo.num_users();
    const std::size_t B = topo.num_bs();
    std::vector<std::size_t> out(U, 0);

    for (std::size_t u = 0; u < U; ++u) {
        if (rule == AffiliationRule::ClosestBS) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t b = 0; b < B; ++b) {
                const double d = distance(topo.user_positions[u], topo.bs_positions[b]);
                if (d < best) {
                    best = d;
                    out[u] = b;
                }
            }
        } else {
            double best = -1.0;
            for (std::size_t b = 0; b < B; ++b) {
                double s = 0.0;
                for (std::size_t k = 0; k < channels.num_bands(); ++k) {
                    const double power = std::norm(channels.h(u, b, k));
                    s = score == BestChannelScore::BandSum ? s + power : std::max(s, power);
                }
                if (s > best) {
                    best = s;
                    out[u] = b;
                }
            }
        }
    }
    return out;
}

VirtualCellPartition affiliate_users(const Topology& topo, const ChannelTensor& channels,
                                     const Partition& bs_partition, AffiliationRule rule,
                                     BestChannelScore score) {
    const std::size_t B = topo.num_bs();
    if (channels.num_bs() != B || channels.num_users() != topo.num_users())
        throw UsageError("affiliate_users: channel tensor does not match topology");
    if (!is_partition_of(bs_partition, B))
        throw UsageError("affiliate_users: BS blocks must partition all base stations");

    VirtualCellPartition vc;
    vc.rule = rule;
    std::vector<std::size_t> cell_of_bs(B);
    for (const auto& block : canonicalize(bs_partition)) {
        for (std::size_t b : block) cell_of_bs[b] = vc.cells.size();
        vc.cells.push_back({block, {}});
    }

    const auto home = affiliated_bs(topo, channels, rule, score);
    for (std::size_t u = 0; u < home.size(); ++u) vc.cells[cell_of_bs[home[u]]].user_block.push_back(u);
    return vc;
}

}  // namespace vcell
