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

#include "vcell/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "vcell/clustering.hpp"
#include "vcell/errors.hpp"
#include "vcell/partition.hpp"
#include "vcell/seeding.hpp"

namespace vcell {

namespace {

using Eigen::Index;

// Position of every user inside its cell's user block.
struct UserSlot {
    std::size_t cell = 0;
    std::size_t row = 0;
};

std::vector<UserSlot> user_slots(const VirtualCellPartition& vc, std::size_t num_users) {
    std::vector<UserSlot> slots(num_users);
    for (std::size_t v = 0; v < vc.cells.size(); ++v)
        for (std::size_t r = 0; r < vc.cells[v].user_block.size(); ++r)
            slots.at(vc.cells[v].user_block[r]) = {v, r};
    return slots;
}

auto row_key(const NetworkResult& r) {
    return std::make_tuple(r.realization_index, static_cast<int>(r.method), static_cast<int>(r.rule),
                           r.num_cells);
}

std::vector<NetworkResult> sweep_realization(const SimulationConfig& cfg, std::size_t realization,
                                             std::span<const ClusteringMethod> methods,
                                             std::span<const AffiliationRule> rules,
                                             const SolverOptions& solver) {
    const Topology topo = generate_topology(cfg, realization);
    const ChannelTensor channels = generate_channels(cfg, topo, realization);
    const std::size_t n = topo.num_bs();

    std::vector<NetworkResult> rows;
    for (ClusteringMethod method : methods) {
        if (method == ClusteringMethod::Exhaustive) {
            for (AffiliationRule rule : rules)
                for (std::size_t m = 1; m <= n; ++m)
                    rows.push_back(exhaustive_best_clustering(cfg, topo, channels, m, rule, realization, solver).second);
            continue;
        }

        std::vector<Partition> by_count(n + 1);
        if (method == ClusteringMethod::Hierarchical) {
            const Dendrogram d = hierarchical_cluster(topo.bs_positions);
            for (std::size_t m = 1; m <= n; ++m) by_count[m] = d.level(m);
        } else {
            for (std::size_t m = 1; m <= n; ++m)
                by_count[m] = kmeans_cluster(topo.bs_positions, m,
                                             derive_seed(cfg.master_seed, StreamTag::KMeans, realization, m));
        }
        for (AffiliationRule rule : rules)
            for (std::size_t m = 1; m <= n; ++m)
                rows.push_back(
                    evaluate_clustering(cfg, topo, channels, by_count[m], rule, method, realization, solver).result);
    }
    return rows;
}

}  // namespace

double NetworkResult::sum_objective_bps() const {
    double s = 0.0;
    for (double v : per_cell_objective_bps) s += v;
    return s;
}

CellProblem build_cell_problem(const ChannelTensor& channels, std::span<const double> budgets_mw,
                               const VirtualCell& cell) {
    const std::size_t K = channels.num_bands();
    const auto n = static_cast<Index>(cell.bs_block.size());

    CellProblem prob;
    prob.band_widths_hz = channels.band_widths_hz();
    prob.noise_cov.reserve(K);
    for (std::size_t k = 0; k < K; ++k)
        prob.noise_cov.push_back(channels.noise_power_mw(k) * Eigen::MatrixXcd::Identity(n, n));

    for (std::size_t u : cell.user_block) {
        std::vector<Eigen::VectorXcd> per_band(K, Eigen::VectorXcd(n));
        for (std::size_t k = 0; k < K; ++k)
            for (Index i = 0; i < n; ++i) per_band[k](i) = channels.h(u, cell.bs_block[static_cast<std::size_t>(i)], k);
        prob.h.push_back(std::move(per_band));
        prob.budgets_mw.push_back(budgets_mw[u]);
    }
    return prob;
}

double achieved_sum_rate(const ChannelTensor& channels, const VirtualCellPartition& partition,
                         std::span<const PowerAllocation> allocations) {
    const std::size_t V = partition.cells.size();
    const std::size_t K = channels.num_bands();
    if (allocations.size() != V) throw UsageError("achieved_sum_rate: one allocation per cell required");
    if (!is_proper_clustering(partition, channels.num_bs(), channels.num_users()))
        throw UsageError("achieved_sum_rate: partition is not a proper clustering of the channel tensor");
    for (std::size_t v = 0; v < V; ++v) {
        const auto& p = allocations[v].p;
        if (static_cast<std::size_t>(p.rows()) != partition.cells[v].user_block.size() ||
            static_cast<std::size_t>(p.cols()) != K)
            throw UsageError("achieved_sum_rate: allocation shape does not match its cell");
    }

    const std::vector<double> no_budgets(channels.num_users(), 0.0);
    const auto slots = user_slots(partition, channels.num_users());

    double total = 0.0;
    for (std::size_t v = 0; v < V; ++v) {
        const VirtualCell& cell = partition.cells[v];
        CellProblem prob = build_cell_problem(channels, no_budgets, cell);
        const auto n = static_cast<Index>(cell.bs_block.size());

        for (std::size_t u = 0; u < channels.num_users(); ++u) {
            if (slots[u].cell == v) continue;
            const auto& other = allocations[slots[u].cell].p;
            for (std::size_t k = 0; k < K; ++k) {
                const double pk = other(static_cast<Index>(slots[u].row), static_cast<Index>(k));
                if (pk == 0.0) continue;
                Eigen::VectorXcd g(n);
                for (Index i = 0; i < n; ++i) g(i) = channels.h(u, cell.bs_block[static_cast<std::size_t>(i)], k);
                prob.noise_cov[k].selfadjointView<Eigen::Lower>().rankUpdate(g, pk);
            }
        }
        total += logdet_objective(prob, allocations[v].p);
    }
    return total;
}

EvaluatedClustering evaluate_clustering(const SimulationConfig& cfg, const Topology& topo,
                                        const ChannelTensor& channels, const Partition& bs_partition,
                                        AffiliationRule rule, ClusteringMethod method,
                                        std::size_t realization_index, const SolverOptions& solver) {
    EvaluatedClustering out;
    out.partition = affiliate_users(topo, channels, bs_partition, rule, cfg.best_channel_score);

    out.allocations.reserve(out.partition.cells.size());
    for (const auto& cell : out.partition.cells) {
        out.allocations.push_back(solve_cell(build_cell_problem(channels, topo.power_budgets_mw, cell), solver));
        out.result.per_cell_objective_bps.push_back(out.allocations.back().objective_bps);
    }

    out.result.realization_index = realization_index;
    out.result.method = method;
    out.result.rule = rule;
    out.result.num_cells = out.partition.cells.size();
    out.result.achieved_sum_rate_bps = achieved_sum_rate(channels, out.partition, out.allocations);
    return out;
}

std::pair<Partition, NetworkResult> exhaustive_best_clustering(const SimulationConfig& cfg,
                                                               const Topology& topo,
                                                               const ChannelTensor& channels,
                                                               std::size_t m, AffiliationRule rule,
                                                               std::size_t realization_index,
                                                               const SolverOptions& solver) {
    PartitionEnumerator partitions(topo.num_bs(), m, cfg.enumeration_cap);

    std::optional<std::pair<Partition, NetworkResult>> best;
    while (auto candidate = partitions.next()) {
        auto eval = evaluate_clustering(cfg, topo, channels, *candidate, rule, ClusteringMethod::Exhaustive,
                                        realization_index, solver);
        if (!best || eval.result.achieved_sum_rate_bps > best->second.achieved_sum_rate_bps)
            best.emplace(std::move(*candidate), std::move(eval.result));
    }
    return std::move(*best);
}

SolverOptions solver_options(const SimulationConfig& cfg) {
    SolverOptions opts;
    opts.tol = cfg.solver_tol;
    opts.max_rounds = cfg.solver_max_rounds;
    return opts;
}

std::vector<NetworkResult> run_sweep(const SimulationConfig& cfg, std::span<const ClusteringMethod> methods,
                                     std::span<const AffiliationRule> rules, const SweepOptions& opts) {
    validate(cfg);
    std::vector<ClusteringMethod> method_list(methods.begin(), methods.end());
    std::sort(method_list.begin(), method_list.end());
    method_list.erase(std::unique(method_list.begin(), method_list.end()), method_list.end());
    std::vector<AffiliationRule> rule_list(rules.begin(), rules.end());
    std::sort(rule_list.begin(), rule_list.end());
    rule_list.erase(std::unique(rule_list.begin(), rule_list.end()), rule_list.end());

    if (std::find(method_list.begin(), method_list.end(), ClusteringMethod::Exhaustive) != method_list.end() &&
        cfg.num_bs > cfg.enumeration_cap)
        throw CapacityError("exhaustive search over " + std::to_string(cfg.num_bs) +
                                " base stations exceeds the enumeration cap of " +
                                std::to_string(cfg.enumeration_cap),
                            cfg.enumeration_cap);

    SolverOptions solver = solver_options(cfg);
    solver.observer = opts.observer;

    const std::size_t R = cfg.num_realizations;
    std::vector<std::vector<NetworkResult>> per_realization(R);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (std::size_t r = next++; r < R; r = next++) {
            try {
                per_realization[r] = sweep_realization(cfg, r, method_list, rule_list, solver);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = R;
            }
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(opts.workers, 1, R);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<NetworkResult> rows;
    for (auto& chunk : per_realization)
        for (auto& row : chunk) rows.push_back(std::move(row));
    std::stable_sort(rows.begin(), rows.end(),
                     [](const NetworkResult& a, const NetworkResult& b) { return row_key(a) < row_key(b); });
    return rows;
}

std::vector<AggregateRow> aggregate(std::span<const NetworkResult> rows) {
    struct Acc {
        std::vector<double> achieved;
        double objective_sum = 0.0;
    };
    std::map<std::tuple<int, int, std::size_t>, Acc> groups;
    for (const auto& r : rows) {
        auto& acc = groups[{static_cast<int>(r.method), static_cast<int>(r.rule), r.num_cells}];
        acc.achieved.push_back(r.achieved_sum_rate_bps);
        acc.objective_sum += r.sum_objective_bps();
    }

    std::vector<AggregateRow> out;
    for (const auto& [key, acc] : groups) {
        AggregateRow row;
        row.method = static_cast<ClusteringMethod>(std::get<0>(key));
        row.rule = static_cast<AffiliationRule>(std::get<1>(key));
        row.num_cells = std::get<2>(key);
        row.count = acc.achieved.size();
        const double n = static_cast<double>(row.count);
        double sum = 0.0;
        for (double v : acc.achieved) sum += v;
        row.mean_achieved_rate_bps = sum / n;
        row.mean_sum_objective_bps = acc.objective_sum / n;
        if (row.count > 1) {
            double ss = 0.0;
            for (double v : acc.achieved) ss += (v - row.mean_achieved_rate_bps) * (v - row.mean_achieved_rate_bps);
            row.stderr_achieved_rate_bps = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
        }
        out.push_back(row);
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_raw_csv(std::ostream& out, std::span<const NetworkResult> rows) {
    out << "realization,method,rule,num_cells,sum_objective_bps,achieved_rate_bps\n";
    for (const auto& r : rows)
        out << r.realization_index << ',' << to_string(r.method) << ',' << to_string(r.rule) << ','
            << r.num_cells << ',' << format_double(r.sum_objective_bps()) << ','
            << format_double(r.achieved_sum_rate_bps) << '\n';
}

void write_raw_jsonl(std::ostream& out, std::span<const NetworkResult> rows) {
    for (const auto& r : rows) {
        const nlohmann::json j = {
            {"realization", r.realization_index},
            {"method", to_string(r.method)},
            {"rule", to_string(r.rule)},
            {"num_cells", r.num_cells},
            {"sum_objective_bps", r.sum_objective_bps()},
            {"achieved_rate_bps", r.achieved_sum_rate_bps},
            {"per_cell_objective_bps", r.per_cell_objective_bps},
        };
        out << j.dump() << '\n';
    }
}

void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows) {
    out << "method,rule,num_cells,count,mean_achieved_rate_bps,stderr_achieved_rate_bps,mean_sum_objective_bps\n";
    for (const auto& r : rows)
        out << to_string(r.method) << ',' << to_string(r.rule) << ',' << r.num_cells << ',' << r.count << ','
            << format_double(r.mean_achieved_rate_bps) << ',' << format_double(r.stderr_achieved_rate_bps) << ','
            << format_double(r.mean_sum_objective_bps) << '\n';
}

}  // namespace vcell
