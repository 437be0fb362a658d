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
#include <optional>
#include <vector>

namespace vcell {

using Block = std::vector<std::size_t>;

// Canonical form: members of each block ascending, blocks ordered by their
// smallest member.
using Partition = std::vector<Block>;

Partition canonicalize(Partition p);

// True iff p's blocks are nonempty, pairwise disjoint and cover {0..n-1}.
bool is_partition_of(const Partition& p, std::size_t n);

inline constexpr std::size_t kDefaultEnumerationCap = 10;

/**
 * Streams every partition of {0..n-1} into exactly m nonempty blocks, each
 * exactly once, in lexicographic order of restricted growth strings. The
 * number produced is the Stirling number of the second kind S(n, m).
 *
 * Throws CapacityError when n exceeds `cap` and UsageError unless 1 <= m <= n.
 */
class PartitionEnumerator {
public:
    PartitionEnumerator(std::size_t n, std::size_t m, std::size_t cap = kDefaultEnumerationCap);

    // Next partition in canonical form, or nullopt once exhausted.
    std::optional<Partition> next();

private:
    bool advance();
    Partition current() const;

    std::size_t n_;
    std::size_t m_;
    std::vector<std::size_t> labels_;  // restricted growth string
    bool started_ = false;
    bool done_ = false;
};

}  // namespace vcell
