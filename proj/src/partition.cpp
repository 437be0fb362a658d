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

#include "vcell/partition.hpp"

#include <algorithm>
#include <string>

#include "vcell/errors.hpp"

namespace vcell {

Partition canonicalize(Partition p) {
    for (auto& block : p) std::sort(block.begin(), block.end());
    std::erase_if(p, [](const Block& b) { return b.empty(); });
    std::sort(p.begin(), p.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return p;
}

bool is_partition_of(const Partition& p, std::size_t n) {
    std::vector<bool> seen(n, false);
    std::size_t count = 0;
    for (const auto& block : p) {
        if (block.empty()) return false;
        for (std::size_t i : block) {
            if (i >= n || seen[i]) return false;
            seen[i] = true;
            ++count;
        }
    }
    return count == n;
}

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t m, std::size_t cap)
    : n_(n), m_(m) {
    if (n > cap)
        throw CapacityError("partition enumeration over " + std::to_string(n) +
                                " elements exceeds the enumeration cap of " + std::to_string(cap),
                            cap);
    if (m < 1 || m > n)
        throw UsageError("enumerate_partitions: need 1 <= m <= n, got m=" + std::to_string(m) +
                         ", n=" + std::to_string(n));

    // Smallest string with m distinct labels: zeros, then 1..m-1 at the tail.
    labels_.assign(n_, 0);
    for (std::size_t j = 1; j < m_; ++j) labels_[n_ - m_ + j] = j;
}

std::optional<Partition> PartitionEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return current();
    }
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return current();
}

bool PartitionEnumerator::advance() {
    // prefix_max[i] = max(labels_[0..i])
    std::vector<std::size_t> prefix_max(n_, 0);
    for (std::size_t i = 1; i < n_; ++i) prefix_max[i] = std::max(prefix_max[i - 1], labels_[i]);

    for (std::size_t i = n_; i-- > 1;) {
        const std::size_t limit = std::min(prefix_max[i - 1] + 1, m_ - 1);
        if (labels_[i] >= limit) continue;
        ++labels_[i];
        const std::size_t top = std::max(prefix_max[i - 1], labels_[i]);
        // Raising a label never lowers the running max, so the tail still
        // has room for the labels that are missing.
        const std::size_t missing = m_ - 1 - top;
        for (std::size_t j = i + 1; j < n_; ++j) labels_[j] = 0;
        for (std::size_t j = 1; j <= missing; ++j) labels_[n_ - 1 - missing + j] = top + j;
        return true;
    }
    return false;
}

Partition PartitionEnumerator::current() const {
    Partition p(m_);
    for (std::size_t i = 0; i < n_; ++i) p[labels_[i]].push_back(i);
    return p;
}

}  // namespace vcell
