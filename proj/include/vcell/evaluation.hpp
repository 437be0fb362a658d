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
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vcell/affiliation.hpp"
#include "vcell/allocator.hpp"
#include "vcell/channel.hpp"
#include "vcell/config.hpp"
#include "vcell/types.hpp"

namespace vcell {

/// One row of a sweep: a clustered, allocated realization and its score.
struct NetworkResult {
    std::size_t realization_index = 0;
    ClusteringMethod method = ClusteringMethod::Hierarchical;
    AffiliationRule rule = AffiliationRule::ClosestBS;
    std::size_t num_cells = 0;
    std::vector<double> per_cell_objective_bps;  // interference-free
    double achieved_sum_rate_bps = 0.0;           // with out-of-cell interference

    double sum_objective_bps() const;
};

// Cell problem over the BSs and users of `cell`, with white noise per band.
CellProblem build_cell_problem(const ChannelTensor& channels, std::span<const double> budgets_mw,
                               const VirtualCell& cell);

/**
 * Network sum rate with joint decoding inside each virtual cell and every
 * out-of-cell transmission treated as Gaussian noise.
 *
 * For cell v and band k the noise covariance becomes
 * N_k + sum_{u not in v} p_uk h_uvk h_uvk^H, where h_uvk collects the gains
 * from u to the BSs of v. allocations[v].p is indexed by position in
 * partition.cells[v].user_block.
 */
double achieved_sum_rate(const ChannelTensor& channels, const VirtualCellPartition& partition,
                         std::span<const PowerAllocation> allocations);

struct EvaluatedClustering {
    VirtualCellPartition partition;
    std::vector<PowerAllocation> allocations;
    NetworkResult result;
};

// Affiliates users, solves each cell ignoring other cells, then scores the
// network with interference.
EvaluatedClustering evaluate_clustering(const SimulationConfig& cfg, const Topology& topo,
                                        const ChannelTensor& channels, const Partition& bs_partition,
                                        AffiliationRule rule, ClusteringMethod method,
                                        std::size_t realization_index, const SolverOptions& solver);

/// Tries every partition of the BSs into m blocks and keeps the one with the
/// highest achieved sum rate. Ties keep the earliest partition in
/// enumeration order. Throws CapacityError when num_bs exceeds
/// cfg.enumeration_cap.
std::pair<Partition, NetworkResult> exhaustive_best_clustering(const SimulationConfig& cfg,
                                                               const Topology& topo,
                                                               const ChannelTensor& channels,
                                                               std::size_t m, AffiliationRule rule,
                                                               std::size_t realization_index,
                                                               const SolverOptions& solver);

SolverOptions solver_options(const SimulationConfig& cfg);

struct SweepOptions {
    std::size_t workers = 1;
    AscentObserver observer;  // forwarded to every cell solve; must be thread safe
};

/**
 * Full Monte Carlo sweep: one row per (realization, method, rule, m) for m in
 * 1..num_bs, sorted in that order. The table depends only on the arguments,
 * never on the worker count.
 */
std::vector<NetworkResult> run_sweep(const SimulationConfig& cfg, std::span<const ClusteringMethod> methods,
                                     std::span<const AffiliationRule> rules, const SweepOptions& opts = {});

struct AggregateRow {
    ClusteringMethod method = ClusteringMethod::Hierarchical;
    AffiliationRule rule = AffiliationRule::ClosestBS;
    std::size_t num_cells = 0;
    std::size_t count = 0;
    double mean_achieved_rate_bps = 0.0;
    double stderr_achieved_rate_bps = 0.0;  // sample std / sqrt(count); 0 for a single row
    double mean_sum_objective_bps = 0.0;
};

std::vector<AggregateRow> aggregate(std::span<const NetworkResult> rows);

// Header: realization,method,rule,num_cells,sum_objective_bps,achieved_rate_bps
void write_raw_csv(std::ostream& out, std::span<const NetworkResult> rows);
void write_raw_jsonl(std::ostream& out, std::span<const NetworkResult> rows);
void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows);

// Shortest decimal string that parses back to exactly v.
std::string format_double(double v);

}  // namespace vcell
