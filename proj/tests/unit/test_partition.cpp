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

#include <set>

#include "vcell/errors.hpp"
#include "vcell/partition.hpp"

#include "oracles.hpp"

using namespace vcell;

namespace {

std::vector<Partition> collect(std::size_t n, std::size_t m) {
    std::vector<Partition> out;
    PartitionEnumerator e(n, m);
    while (auto p = e.next()) out.push_back(*p);
    return out;
}

}  // namespace

TEST_CASE("small partition counts", "[partition]") {
    const auto three_two = collect(3, 2);
    CHECK(three_two.size() == 3);
    CHECK(three_two[0] == Partition{{0, 1}, {2}});
    CHECK(three_two[1] == Partition{{0, 2}, {1}});
    CHECK(three_two[2] == Partition{{0}, {1, 2}});

    CHECK(collect(6, 3).size() == 90);
    CHECK(collect(5, 5) == std::vector<Partition>{{{0}, {1}, {2}, {3}, {4}}});
    CHECK(collect(4, 1) == std::vector<Partition>{{{0, 1, 2, 3}}});
}

TEST_CASE("enumeration yields S(n,m) distinct canonical partitions", "[partition]") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t m = 1; m <= n; ++m) {
            const auto all = collect(n, m);
            CHECK(all.size() == oracle::stirling2(static_cast<unsigned>(n), static_cast<unsigned>(m)));
            std::set<Partition> unique(all.begin(), all.end());
            CHECK(unique.size() == all.size());
            for (const auto& p : all) {
                CHECK(p.size() == m);
                CHECK(is_partition_of(p, n));
                CHECK(canonicalize(p) == p);
            }
        }
}

TEST_CASE("enumeration limits", "[partition]") {
    CHECK_THROWS_AS(PartitionEnumerator(11, 2), CapacityError);
    try {
        PartitionEnumerator(12, 3, 10);
    } catch (const CapacityError& e) {
        CHECK(e.cap() == 10);
        CHECK(std::string(e.what()).find("10") != std::string::npos);
    }
    CHECK_NOTHROW(PartitionEnumerator(12, 3, 12));
    CHECK_THROWS_AS(PartitionEnumerator(4, 0), UsageError);
    CHECK_THROWS_AS(PartitionEnumerator(4, 5), UsageError);
}

TEST_CASE("enumerator stays exhausted", "[partition]") {
    PartitionEnumerator e(2, 2);
    CHECK(e.next().has_value());
    CHECK_FALSE(e.next().has_value());
    CHECK_FALSE(e.next().has_value());
}

TEST_CASE("canonicalize and is_partition_of", "[partition]") {
    CHECK(canonicalize({{3, 1}, {2, 0}}) == Partition{{0, 2}, {1, 3}});
    CHECK(is_partition_of({{0, 2}, {1}}, 3));
    CHECK_FALSE(is_partition_of({{0, 2}, {2, 1}}, 3));
    CHECK_FALSE(is_partition_of({{0}, {1}}, 3));
    CHECK_FALSE(is_partition_of({{0, 1}, {}, {2}}, 3));
    CHECK_FALSE(is_partition_of({{0, 1, 5}}, 3));
}
