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

#include <catch2/catch_amalgamated.hpp>

#include "vcell/affiliation.hpp"
#include "vcell/errors.hpp"

using namespace vcell;

namespace {

// Two BSs on a line and one user much closer to BS 0.
struct TwoBs {
    Topology topo;
    ChannelTensor ch;

    TwoBs() : ch(1, 2, {1.0, 1.0}, {1.0, 1.0}) {
        topo.bs_positions = {{0, 0}, {100, 0}};
        topo.user_positions = {{10, 0}};
        topo.power_budgets_mw = {1.0};
        // Shadowing pushes BS 1 ahead despite the distance.
        ch.h(0, 0, 0) = {1e-6, 0};
        ch.h(0, 0, 1) = {1e-6, 0};
        ch.h(0, 1, 0) = {0, 1e-4};
        ch.h(0, 1, 1) = {1e-4, 0};
    }
};

}  // namespace

TEST_CASE("closest and best-channel rules can disagree", "[affiliation]") {
    TwoBs net;
    const Partition separate{{0}, {1}};
    const auto closest = affiliate_users(net.topo, net.ch, separate, AffiliationRule::ClosestBS);
    const auto best = affiliate_users(net.topo, net.ch, separate, AffiliationRule::BestChannel);
    CHECK(closest.cells[0].user_block == Block{0});
    CHECK(closest.cells[1].user_block.empty());
    CHECK(best.cells[0].user_block.empty());
    CHECK(best.cells[1].user_block == Block{0});
    CHECK(closest.rule == AffiliationRule::ClosestBS);
    CHECK(best.rule == AffiliationRule::BestChannel);
}

TEST_CASE("band-sum and max-band scores", "[affiliation]") {
    Topology topo;
    topo.bs_positions = {{0, 0}, {1, 0}};
    topo.user_positions = {{0.5, 0}};
    topo.power_budgets_mw = {1.0};
    ChannelTensor ch(1, 2, {1.0, 1.0, 1.0}, {1.0, 1.0, 1.0});
    // BS 0: one strong band. BS 1: three moderate bands with a larger sum.
    ch.h(0, 0, 0) = {1.5, 0};
    ch.h(0, 1, 0) = {1.0, 0};
    ch.h(0, 1, 1) = {1.0, 0};
    ch.h(0, 1, 2) = {1.0, 0};
    CHECK(affiliated_bs(topo, ch, AffiliationRule::BestChannel, BestChannelScore::BandSum) ==
          std::vector<std::size_t>{1});
    CHECK(affiliated_bs(topo, ch, AffiliationRule::BestChannel, BestChannelScore::MaxBand) ==
          std::vector<std::size_t>{0});
}

TEST_CASE("one virtual cell takes every user", "[affiliation]") {
    SimulationConfig cfg;
    cfg.num_realizations = 1;
    const Topology topo = generate_topology(cfg, 0);
    const ChannelTensor ch = generate_channels(cfg, topo, 0);
    for (auto rule : {AffiliationRule::ClosestBS, AffiliationRule::BestChannel}) {
        const auto vc = affiliate_users(topo, ch, {{0, 1, 2, 3, 4, 5}}, rule);
        REQUIRE(vc.cells.size() == 1);
        CHECK(vc.cells[0].user_block.size() == 50);
        CHECK(is_proper_clustering(vc, 6, 50));
    }
}

TEST_CASE("user sitting on a BS is affiliated with it", "[affiliation]") {
    Topology topo;
    topo.bs_positions = {{0, 0}, {500, 500}, {900, 100}};
    topo.user_positions = {{500, 500}, {900, 100}, {0, 0}};
    topo.power_budgets_mw = {1, 1, 1};
    const ChannelTensor ch(3, 3, {1.0}, {1.0});
    CHECK(affiliated_bs(topo, ch, AffiliationRule::ClosestBS) == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("affiliation always yields a proper clustering", "[affiliation]") {
    SimulationConfig cfg;
    cfg.num_realizations = 5;
    for (std::size_t r = 0; r < 5; ++r) {
        const Topology topo = generate_topology(cfg, r);
        const ChannelTensor ch = generate_channels(cfg, topo, r);
        for (std::size_t m = 1; m <= 6; ++m) {
            PartitionEnumerator parts(6, m);
            int taken = 0;
            while (auto p = parts.next()) {
                if (++taken > 10) break;
                for (auto rule : {AffiliationRule::ClosestBS, AffiliationRule::BestChannel}) {
                    const auto vc = affiliate_users(topo, ch, *p, rule);
                    CHECK(is_proper_clustering(vc, 6, 50));
                    CHECK(vc.bs_partition() == *p);
                }
            }
        }
    }
}

TEST_CASE("BS partition must cover every BS", "[affiliation]") {
    TwoBs net;
    CHECK_THROWS_AS(affiliate_users(net.topo, net.ch, {{0}}, AffiliationRule::ClosestBS), UsageError);
    CHECK_THROWS_AS(affiliate_users(net.topo, net.ch, {{0, 1}, {1}}, AffiliationRule::ClosestBS), UsageError);
}
