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
#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"

#include "vcell/geometry.hpp"
#include "vcell/partition.hpp"

namespace vcell {

// Smallest radius of a disc centered at a member point that covers all
// members: min over centers c of max over members s of |c - s|.
double minimax_radius(std::span<const Point2> block);
double minimax_radius(std::span<const Point2> points, const Block& block);

// Minimax radius of the union. Blocks must be nonempty and disjoint.
double minimax_linkage(std::span<const Point2> a, std::span<const Point2> b);
double minimax_linkage(std::span<const Point2> points, const Block& a, const Block& b);

struct MergeRecord {
    Block left;
    Block right;
    double radius = 0.0;
};

/// Nested clusterings for every cluster count 1..n.
struct Dendrogram {
    std::vector<Partition> levels;  // levels[m - 1] has m blocks
    std::vector<MergeRecord> merges;  // in merge order, n - 1 entries

    std::size_t size() const { return levels.size(); }
    const Partition& level(std::size_t m) const { return levels.at(m - 1); }
};

/**
 * Agglomerative clustering with minimax linkage.
 *
 * Starts from singletons and repeatedly merges the pair of blocks whose union
 * has the smallest minimax radius. Ties go to the pair that is
 * lexicographically first by (smallest member of first block, smallest
 * member of second block).
 */
Dendrogram hierarchical_cluster(std::span<const Point2> points);

// Lloyd's algorithm from m distinct seeded random points. Empty clusters take
// the point farthest from the centroid of the current largest cluster.
Partition kmeans_cluster(std::span<const Point2> points, std::size_t m, std::uint64_t seed,
                         std::size_t max_iterations = 100);

nlohmann::json to_json(const Dendrogram& d);

}  // namespace vcell
