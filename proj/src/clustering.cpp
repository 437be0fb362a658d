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

#include "vcell/clustering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

template <typename At>
double radius_impl(std::size_t count, At at) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < count; ++c) {
        double farthest = 0.0;
        for (std::size_t s = 0; s < count; ++s) farthest = std::max(farthest, distance(at(c), at(s)));
        best = std::min(best, farthest);
    }
    return best;
}

Block merged(const Block& a, const Block& b) {
    Block out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

double minimax_radius(std::span<const Point2> block) {
    if (block.empty()) throw UsageError("minimax_radius: empty block");
    return radius_impl(block.size(), [&](std::size_t i) { return block[i]; });
}

double minimax_radius(std::span<const Point2> points, const Block& block) {
    if (block.empty()) throw UsageError("minimax_radius: empty block");
    for (std::size_t i : block)
        if (i >= points.size()) throw UsageError("minimax_radius: index out of range");
    return radius_impl(block.size(), [&](std::size_t i) { return points[block[i]]; });
}

double minimax_linkage(std::span<const Point2> a, std::span<const Point2> b) {
    if (a.empty() || b.empty()) throw UsageError("minimax_linkage: empty block");
    for (const auto& p : a)
        if (std::find(b.begin(), b.end(), p) != b.end())
            throw UsageError("minimax_linkage: blocks overlap");
    std::vector<Point2> joined(a.begin(), a.end());
    joined.insert(joined.end(), b.begin(), b.end());
    return minimax_radius(joined);
}

double minimax_linkage(std::span<const Point2> points, const Block& a, const Block& b) {
    if (a.empty() || b.empty()) throw UsageError("minimax_linkage: empty block");
    for (std::size_t i : a)
        if (std::find(b.begin(), b.end(), i) != b.end())
            throw UsageError("minimax_linkage: blocks overlap");
    Block joined(a);
    joined.insert(joined.end(), b.begin(), b.end());
    return minimax_radius(points, joined);
}

Dendrogram hierarchical_cluster(std::span<const Point2> points) {
    const std::size_t n = points.size();
    if (n == 0) throw UsageError("hierarchical_cluster: no points");

    Dendrogram out;
    out.levels.resize(n);

    Partition current;
    for (std::size_t i = 0; i < n; ++i) current.push_back({i});
    out.levels[n - 1] = current;

    // Linkage cache keyed by block position; recomputed only for the new block.
    std::vector<std::vector<double>> link(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) link[i][j] = link[j][i] = distance(points[i], points[j]);

    for (std::size_t m = n - 1; m >= 1; --m) {
        std::size_t bi = 0, bj = 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                if (link[i][j] < best) {
                    best = link[i][j];
                    bi = i;
                    bj = j;
                }

        out.merges.push_back({current[bi], current[bj], best});
        Block joined = merged(current[bi], current[bj]);

        // bi < bj and blocks are ordered by smallest member, so the union
        // keeps position bi and the order stays canonical.
        current[bi] = std::move(joined);
        current.erase(current.begin() + static_cast<std::ptrdiff_t>(bj));
        link.erase(link.begin() + static_cast<std::ptrdiff_t>(bj));
        for (auto& row : link) row.erase(row.begin() + static_cast<std::ptrdiff_t>(bj));
        for (std::size_t g = 0; g < current.size(); ++g) {
            if (g == bi) continue;
            const double d = minimax_linkage(points, current[bi], current[g]);
            link[bi][g] = link[g][bi] = d;
        }

        out.levels[m - 1] = current;
    }
    return out;
}

Partition kmeans_cluster(std::span<const Point2> points, std::size_t m, std::uint64_t seed,
                         std::size_t max_iterations) {
    const std::size_t n = points.size();
    if (m < 1 || m > n)
        throw UsageError("kmeans_cluster: need 1 <= m <= n, got m=" + std::to_string(m) +
                         ", n=" + std::to_string(n));

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<Point2> centroids(m);
    for (std::size_t c = 0; c < m; ++c) centroids[c] = points[order[c]];

    std::vector<std::size_t> assign(n, m);  // m = unassigned
    auto nearest = [&](const Point2& p) {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < m; ++c) {
            const double d = distance(p, centroids[c]);
            if (d < best_d) {
                best_d = d;
                best = c;
            }
        }
        return best;
    };
    auto recompute = [&] {
        std::vector<Point2> sum(m);
        std::vector<std::size_t> count(m, 0);
        for (std::size_t i = 0; i < n; ++i) {
            sum[assign[i]].x += points[i].x;
            sum[assign[i]].y += points[i].y;
            ++count[assign[i]];
        }
        for (std::size_t c = 0; c < m; ++c)
            if (count[c] > 0) centroids[c] = {sum[c].x / count[c], sum[c].y / count[c]};
        return count;
    };

    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t c = nearest(points[i]);
            if (c != assign[i]) {
                assign[i] = c;
                changed = true;
            }
        }
        auto count = recompute();

        // Repair empty clusters.
        for (std::size_t empty = 0; empty < m; ++empty) {
            if (count[empty] > 0) continue;
            const auto largest = static_cast<std::size_t>(
                std::max_element(count.begin(), count.end()) - count.begin());
            std::size_t far = n;
            double far_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (assign[i] != largest) continue;
                const double d = distance(points[i], centroids[largest]);
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            assign[far] = empty;
            centroids[empty] = points[far];
            count = recompute();
            changed = true;
        }

        if (!changed) break;
    }

    Partition p(m);
    for (std::size_t i = 0; i < n; ++i) p[assign[i]].push_back(i);
    return canonicalize(std::move(p));
}

nlohmann::json to_json(const Dendrogram& d) {
    nlohmann::json levels = nlohmann::json::object();
    for (std::size_t m = 1; m <= d.size(); ++m) levels[std::to_string(m)] = d.level(m);
    nlohmann::json merges = nlohmann::json::array();
    for (const auto& rec : d.merges)
        merges.push_back({{"left", rec.left}, {"right", rec.right}, {"radius", rec.radius}});
    return {{"levels", levels}, {"merges", merges}};
}

}  // namespace vcell
