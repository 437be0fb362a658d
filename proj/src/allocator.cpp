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

#include "vcell/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

using Eigen::MatrixXcd;

constexpr std::size_t kMaxBracketSteps = 2000;
constexpr std::size_t kMaxBisectionSteps = 2000;
constexpr double kBudgetTol = 1e-10;

// ln det of a Hermitian PD matrix from its Cholesky factor. Reads the lower triangle.
double log_det(const MatrixXcd& a) {
    Eigen::LLT<MatrixXcd, Eigen::Lower> llt(a);
    if (llt.info() != Eigen::Success) throw NumericError("log-determinant: matrix is not positive definite");
    double s = 0.0;
    const auto& l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < l.rows(); ++i) s += std::log(l(i, i).real());
    return 2.0 * s;
}

// N_k plus p_jk h_jk h_jk^H for every user except `skip`. Lower triangle only.
MatrixXcd covariance(const CellProblem& prob, std::size_t band, const PowerMatrix& p, std::size_t skip) {
    MatrixXcd s = prob.noise_cov[band];
    for (std::size_t j = 0; j < prob.num_users(); ++j) {
        if (j == skip) continue;
        const double pj = p(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(band));
        if (pj == 0.0) continue;
        s.selfadjointView<Eigen::Lower>().rankUpdate(prob.h[j][band], pj);
    }
    return s;
}

double allocated(std::span<const double> band_widths, std::span<const double> gains, double lambda) {
    double total = 0.0;
    for (std::size_t k = 0; k < gains.size(); ++k)
        if (gains[k] >= kGainFloor) total += std::max(0.0, band_widths[k] / lambda - 1.0 / gains[k]);
    return total;
}

}  // namespace

void CellProblem::validate() const {
    const std::size_t K = num_bands();
    const auto n = static_cast<Eigen::Index>(num_bs());
    if (noise_cov.size() != K) throw UsageError("CellProblem: one noise covariance per band required");
    if (budgets_mw.size() != num_users()) throw UsageError("CellProblem: one budget per user required");
    for (std::size_t k = 0; k < K; ++k) {
        if (!(band_widths_hz[k] > 0)) throw UsageError("CellProblem: band widths must be positive");
        const auto& nk = noise_cov[k];
        if (nk.rows() != n || nk.cols() != n) throw UsageError("CellProblem: noise covariance has wrong shape");
        if (!nk.isApprox(nk.adjoint(), 1e-12)) throw NumericError("CellProblem: noise covariance is not Hermitian");
        log_det(nk);
    }
    for (std::size_t u = 0; u < num_users(); ++u) {
        if (h[u].size() != K) throw UsageError("CellProblem: one channel vector per band required");
        for (const auto& v : h[u])
            if (v.size() != n) throw UsageError("CellProblem: channel vector has wrong length");
        if (!(budgets_mw[u] >= 0)) throw UsageError("CellProblem: budgets must be nonnegative");
    }
}

double logdet_objective(const CellProblem& prob, const PowerMatrix& p) {
    double total = 0.0;
    for (std::size_t k = 0; k < prob.num_bands(); ++k) {
        const double gain = log_det(covariance(prob, k, p, prob.num_users())) - log_det(prob.noise_cov[k]);
        total += prob.band_widths_hz[k] * gain;
    }
    return total / std::numbers::ln2;
}

double effective_gain(const CellProblem& prob, std::size_t user, std::size_t band, const PowerMatrix& p) {
    const auto& h = prob.h[user][band];
    if (h.isZero(0.0)) return 0.0;
    Eigen::LLT<MatrixXcd, Eigen::Lower> llt(covariance(prob, band, p, user));
    if (llt.info() != Eigen::Success) throw NumericError("effective_gain: covariance is not positive definite");
    const Eigen::VectorXcd x = llt.solve(h);
    return std::max(0.0, h.dot(x).real());
}

std::vector<double> waterfill(std::span<const double> band_widths, std::span<const double> gains,
                              double budget) {
    const std::size_t K = gains.size();
    if (band_widths.size() != K) throw UsageError("waterfill: widths and gains differ in length");
    std::vector<double> p(K, 0.0);

    double lambda_hi = 0.0;
    for (std::size_t k = 0; k < K; ++k)
        if (gains[k] >= kGainFloor) lambda_hi = std::max(lambda_hi, band_widths[k] * gains[k]);
    if (lambda_hi == 0.0 || !(budget > 0)) return p;

    // At lambda_hi nothing is allocated; halve until the budget is exceeded.
    double lambda_lo = lambda_hi;
    for (std::size_t i = 0;; ++i) {
        if (i == kMaxBracketSteps) throw NumericError("waterfill: could not bracket the water level");
        lambda_lo *= 0.5;
        if (allocated(band_widths, gains, lambda_lo) > budget) break;
    }

    double lambda = 0.5 * (lambda_lo + lambda_hi);
    for (std::size_t i = 0;; ++i) {
        if (i == kMaxBisectionSteps) throw NumericError("waterfill: bisection did not converge");
        lambda = 0.5 * (lambda_lo + lambda_hi);
        const double used = allocated(band_widths, gains, lambda);
        if (std::abs(used - budget) < kBudgetTol * budget) break;
        if (lambda_hi - lambda_lo <= 4 * std::numeric_limits<double>::epsilon() * lambda_hi) break;
        (used > budget ? lambda_lo : lambda_hi) = lambda;
    }

    // Exact water level on the active set implied by lambda. Re-derive the
    // set from that level until it is stable.
    std::vector<bool> active(K, false);
    for (std::size_t k = 0; k < K; ++k)
        active[k] = gains[k] >= kGainFloor && band_widths[k] / lambda > 1.0 / gains[k];
    for (std::size_t pass = 0; pass <= 2 * K + 2; ++pass) {
        double widths = 0.0, inverse_gains = 0.0;
        for (std::size_t k = 0; k < K; ++k)
            if (active[k]) {
                widths += band_widths[k];
                inverse_gains += 1.0 / gains[k];
            }
        if (widths == 0.0) break;
        const double level = (budget + inverse_gains) / widths;  // 1 / lambda
        bool changed = false;
        for (std::size_t k = 0; k < K; ++k) {
            const bool want = gains[k] >= kGainFloor && band_widths[k] * level - 1.0 / gains[k] > 0.0;
            if (want != active[k]) {
                active[k] = want;
                changed = true;
            }
        }
        if (changed) continue;
        for (std::size_t k = 0; k < K; ++k) p[k] = active[k] ? band_widths[k] * level - 1.0 / gains[k] : 0.0;
        return p;
    }

    // Degenerate active set; fall back to the bisection level.
    for (std::size_t k = 0; k < K; ++k)
        if (gains[k] >= kGainFloor) p[k] = std::max(0.0, band_widths[k] / lambda - 1.0 / gains[k]);
    return p;
}

std::vector<double> waterfill_user(const CellProblem& prob, std::size_t user, const PowerMatrix& p) {
    const std::size_t K = prob.num_bands();
    std::vector<double> gains(K);
    for (std::size_t k = 0; k < K; ++k) gains[k] = effective_gain(prob, user, k, p);
    return waterfill(prob.band_widths_hz, gains, prob.budgets_mw[user]);
}

PowerAllocation solve_cell(const CellProblem& prob, const SolverOptions& opts) {
    prob.validate();
    const std::size_t U = prob.num_users();
    const std::size_t K = prob.num_bands();

    PowerAllocation out;
    out.p = PowerMatrix::Zero(static_cast<Eigen::Index>(U), static_cast<Eigen::Index>(K));
    if (U == 0) {
        out.converged = true;
        return out;
    }

    double objective = logdet_objective(prob, out.p);
    for (std::size_t round = 1; round <= opts.max_rounds; ++round) {
        double current = objective;
        for (std::size_t u = 0; u < U; ++u) {
            const auto ui = static_cast<Eigen::Index>(u);
            const Eigen::RowVectorXd previous = out.p.row(ui);
            const auto row = waterfill_user(prob, u, out.p);
            for (std::size_t k = 0; k < K; ++k) out.p(ui, static_cast<Eigen::Index>(k)) = row[k];
            // The best response cannot lower the objective in exact arithmetic,
            // but rounding in the log-det can make a near-stationary update look
            // worse by a few ulps. Such updates are dropped.
            const double proposed = logdet_objective(prob, out.p);
            const bool accepted = proposed >= current;
            if (!accepted) out.p.row(ui) = previous;
            const double after = accepted ? proposed : current;
            if (opts.observer) opts.observer({round, u, current, after, proposed, accepted});
            current = after;
        }
        out.iterations = round;

        // A single user's best response solves the whole problem.
        const bool done = U == 1 || current - objective <= opts.tol * std::abs(current);
        objective = current;
        if (done) {
            out.converged = true;
            break;
        }
    }
    out.objective_bps = objective;
    return out;
}

}  // namespace vcell
