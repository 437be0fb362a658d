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
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace vcell {

using PowerMatrix = Eigen::MatrixXd;  // (user, band) in mW

/// Joint-decoding power allocation problem for one virtual cell.
///
/// Users and BSs are indexed locally within the cell. h[u][k] is the vector
/// of channel gains from user u to every BS of the cell on band k.
struct CellProblem {
    std::vector<std::vector<Eigen::VectorXcd>> h;  // [user][band], length num_bs
    std::vector<Eigen::MatrixXcd> noise_cov;        // [band], Hermitian PD
    std::vector<double> band_widths_hz;
    std::vector<double> budgets_mw;                 // [user]

    std::size_t num_users() const { return h.size(); }
    std::size_t num_bands() const { return band_widths_hz.size(); }
    std::size_t num_bs() const { return noise_cov.empty() ? 0 : static_cast<std::size_t>(noise_cov.front().rows()); }

    // Throws UsageError on inconsistent dimensions and NumericError when a
    // noise covariance is not Hermitian positive definite.
    void validate() const;
};

struct PowerAllocation {
    PowerMatrix p;
    double objective_bps = 0.0;
    std::size_t iterations = 0;  // full rounds over the users
    bool converged = false;
};

/// One inner step of the coordinate ascent, reported to an observer.
struct AscentStep {
    std::size_t round = 0;
    std::size_t user = 0;
    double objective_before = 0.0;
    double objective_after = 0.0;     // value kept after the step
    double objective_proposed = 0.0;  // value of the raw best response
    bool accepted = true;             // false if the update was reverted
};

using AscentObserver = std::function<void(const AscentStep&)>;

struct SolverOptions {
    double tol = 1e-8;  // relative objective improvement per round
    std::size_t max_rounds = 200;
    // Called after every user update.
    AscentObserver observer;
};

// Channel gains below this are treated as null and receive no power.
inline constexpr double kGainFloor = 1e-15;

/**
 * Sum over bands of W_k * (log2 det(N_k + sum_u p_uk h_uk h_uk^H) - log2 det(N_k)).
 *
 * Zero at p = 0. Determinants come from Cholesky factors. Throws NumericError
 * if a matrix is not positive definite.
 */
double logdet_objective(const CellProblem& prob, const PowerMatrix& p);

/// h^H Sigma^-1 h with Sigma = N_k + sum_{j != user} p_jk h_jk h_jk^H, via a
/// Cholesky solve.
double effective_gain(const CellProblem& prob, std::size_t user, std::size_t band, const PowerMatrix& p);

/**
 * Bandwidth-weighted water-filling: maximizes sum_k W_k log2(1 + g_k p_k)
 * subject to sum_k p_k <= budget, p >= 0.
 *
 * p_k = max(0, W_k / lambda - 1 / g_k), with lambda bracketed and bisected
 * until the budget holds to 1e-10 relative, then fixed exactly on the
 * resulting active set. Returns all zeros when every g_k is below kGainFloor.
 */
std::vector<double> waterfill(std::span<const double> band_widths, std::span<const double> gains,
                              double budget);

// Best response of `user` to the other users' powers in `p` (its own row is ignored).
std::vector<double> waterfill_user(const CellProblem& prob, std::size_t user, const PowerMatrix& p);

/**
 * Cyclic coordinate ascent over users from p = 0, each step a water-filling
 * best response. Stops once a full round improves the objective by less than
 * tol (relative) or after max_rounds.
 */
PowerAllocation solve_cell(const CellProblem& prob, const SolverOptions& opts = {});

}  // namespace vcell
