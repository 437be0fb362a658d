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

#include <cstdint>

namespace vcell {

// Independent random streams per realization. Each consumer draws from its
// own generator seeded with derive_seed(master, tag, index...), so results do
// not depend on the order in which realizations or streams are processed.
enum class StreamTag : std::uint64_t {
    Topology = 1,
    Shadowing = 2,
    Fading = 3,
    KMeans = 4,
};

// SplitMix64 finalizer. Stable across platforms and compilers.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Child seed = mix64(mix64(mix64(mix64(master) ^ tag) ^ index) ^ extra).
/// `extra` distinguishes sub-streams within a realization (e.g. cluster count
/// for k-means initialization).
constexpr std::uint64_t derive_seed(std::uint64_t master, StreamTag tag,
                                    std::uint64_t index, std::uint64_t extra = 0) {
    std::uint64_t s = mix64(master);
    s = mix64(s ^ static_cast<std::uint64_t>(tag));
    s = mix64(s ^ index);
    return mix64(s ^ extra);
}

}  // namespace vcell
