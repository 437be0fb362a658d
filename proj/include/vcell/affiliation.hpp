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

#include <cstddef>
#include <vector>

#include "vcell/channel.hpp"
#include "vcell/partition.hpp"
#include "vcell/types.hpp"

namespace vcell {

struct VirtualCell {
    Block bs_block;
    Block user_block;  // may be empty when no user picked any BS of the cell
};

/// A proper clustering: BS blocks partition the BSs, user blocks partition
/// the users, cell v owns bs_block and user_block of the same index.
struct VirtualCellPartition {
    std::vector<VirtualCell> cells;
    AffiliationRule rule = AffiliationRule::ClosestBS;

    Partition bs_partition() const;
};

bool is_proper_clustering(const VirtualCellPartition& vc, std::size_t num_bs, std::size_t num_users);

// Index of the BS each user is affiliated with under `rule`. Ties go to the
// lowest BS index.
std::vector<std::size_t> affiliated_bs(const Topology& topo, const ChannelTensor& channels,
                                       AffiliationRule rule,
                                       BestChannelScore score = BestChannelScore::BandSum);

// Each user joins the virtual cell that contains its affiliated BS. Cells
// follow the order of `bs_partition` after canonicalization.
VirtualCellPartition affiliate_users(const Topology& topo, const ChannelTensor& channels,
                                     const Partition& bs_partition, AffiliationRule rule,
                                     BestChannelScore score = BestChannelScore::BandSum);

}  // namespace vcell
