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

// Reference implementations used only by the tests. Each one takes a
// different route from the library code it checks: brute force, closed-form
// small-matrix algebra, grid search, or a from-scratch rerun of the
// agglomerative merge loop.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "vcell/allocator.hpp"
#include "vcell/geometry.hpp"

namespace oracle {

using cplx = std::complex<double>;
using CMat = std::vector<std::vector<cplx>>;

inline std::uint64_t stirling2(unsigned n, unsigned m) {
    std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    s[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return m <= n ? s[n][m] : 0;
}

inline double euclid(const vcell::Point2& a, const vcell::Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

inline double brute_radius(const std::vector<vcell::Point2>& pts, const std::set<std::size_t>& block) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c : block) {
        double worst = 0.0;
        for (std::size_t s : block) worst = std::max(worst, euclid(pts[c], pts[s]));
        best = std::min(best, worst);
    }
    return best;
}

struct MergeStep {
    std::set<std::size_t> left, right;
    double radius;
};

struct AgglomerativeTrace {
    std::vector<MergeStep> merges;
    std::vector<std::set<std::set<std::size_t>>> levels;  // levels[m-1]
};

// Every level recomputes all pairwise linkages from scratch. Ties resolved by
// comparing (min of first, min of second) explicitly.
inline AgglomerativeTrace agglomerate(const std::vector<vcell::Point2>& pts) {
    const std::size_t n = pts.size();
    AgglomerativeTrace t;
    t.levels.resize(n);
    std::set<std::set<std::size_t>> blocks;
    for (std::size_t i = 0; i < n; ++i) blocks.insert({i});
    t.levels[n - 1] = blocks;
    while (blocks.size() > 1) {
        const std::set<std::size_t>* ba = nullptr;
        const std::set<std::size_t>* bb = nullptr;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : blocks)
            for (const auto& b : blocks) {
                if (*a.begin() >= *b.begin()) continue;
                std::set<std::size_t> u = a;
                u.insert(b.begin(), b.end());
                const double r = brute_radius(pts, u);
                const bool better = r < best ||
                                    (r == best && std::make_pair(*a.begin(), *b.begin()) <
                                                      std::make_pair(*ba->begin(), *bb->begin()));
                if (better) {
                    best = r;
                    ba = &a;
                    bb = &b;
                }
            }
        MergeStep step{*ba, *bb, best};
        std::set<std::size_t> u = *ba;
        u.insert(bb->begin(), bb->end());
        blocks.erase(step.left);
        blocks.erase(step.right);
        blocks.insert(u);
        t.merges.push_back(step);
        t.levels[blocks.size() - 1] = blocks;
    }
    return t;
}

inline CMat to_rows(const Eigen::MatrixXcd& m) {
    CMat out(static_cast<std::size_t>(m.rows()), std::vector<cplx>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

// Laplace expansion along the first row.
inline cplx cofactor_det(const CMat& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    cplx det = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        CMat minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<cplx> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(a[r][cc]);
            minor.push_back(row);
        }
        det += (c % 2 == 0 ? 1.0 : -1.0) * a[0][c] * cofactor_det(minor);
    }
    return det;
}

// Inverse through the adjugate. Fine for the tiny matrices used in tests.
inline CMat adjugate_inverse(const CMat& a) {
    const std::size_t n = a.size();
    const cplx det = cofactor_det(a);
    CMat inv(n, std::vector<cplx>(n));
    if (n == 1) {
        inv[0][0] = 1.0 / a[0][0];
        return inv;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CMat minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<cplx> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(a[r][c]);
                minor.push_back(row);
            }
            inv[j][i] = ((i + j) % 2 == 0 ? 1.0 : -1.0) * cofactor_det(minor) / det;
        }
    return inv;
}

// N_k + sum_{j != skip} p_jk h h^H, full matrix.
inline CMat covariance(const vcell::CellProblem& prob, std::size_t band, const Eigen::MatrixXd& p,
                       std::size_t skip) {
    CMat s = to_rows(prob.noise_cov[band]);
    const std::size_t n = s.size();
    for (std::size_t j = 0; j < prob.num_users(); ++j) {
        if (j == skip) continue;
        const auto& h = prob.h[j][band];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                s[r][c] += p(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(band)) * h(r) *
                           std::conj(h(c));
    }
    return s;
}

inline double objective(const vcell::CellProblem& prob, const Eigen::MatrixXd& p) {
    double total = 0.0;
    for (std::size_t k = 0; k < prob.num_bands(); ++k) {
        const double num = cofactor_det(covariance(prob, k, p, prob.num_users())).real();
        const double den = cofactor_det(to_rows(prob.noise_cov[k])).real();
        total += prob.band_widths_hz[k] * std::log2(num / den);
    }
    return total;
}

inline double effective_gain(const vcell::CellProblem& prob, std::size_t user, std::size_t band,
                             const Eigen::MatrixXd& p) {
    const CMat inv = adjugate_inverse(covariance(prob, band, p, user));
    const auto& h = prob.h[user][band];
    cplx q = 0.0;
    for (std::size_t r = 0; r < inv.size(); ++r)
        for (std::size_t c = 0; c < inv.size(); ++c) q += std::conj(h(r)) * inv[r][c] * h(c);
    return q.real();
}

struct KktReport {
    bool stationarity = true;   // active bands share one water level
    bool complementary = true;  // inactive bands sit below it
    bool budget_tight = true;
    double lambda = 0.0;
};

// Certificate for max sum_k W_k log(1 + g_k p_k) s.t. sum p <= budget, p >= 0.
inline KktReport kkt_certificate(const std::vector<double>& w, const std::vector<double>& g,
                                 const std::vector<double>& p, double budget, double rel_tol = 1e-6,
                                 double budget_tol = 1e-9) {
    KktReport r;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, used = 0.0;
    bool any_gain = false;
    for (std::size_t k = 0; k < g.size(); ++k) {
        used += p[k];
        if (g[k] >= vcell::kGainFloor) any_gain = true;
        if (p[k] > 0) {
            const double v = w[k] * g[k] / (1.0 + g[k] * p[k]);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!any_gain) {
        r.budget_tight = used == 0.0;
        return r;
    }
    if (hi == 0.0) {
        r.budget_tight = false;
        return r;
    }
    r.lambda = 0.5 * (lo + hi);
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (p[k] < 0) r.complementary = false;
        if (p[k] > 0) {
            const double v = w[k] * g[k] / (1.0 + g[k] * p[k]);
            if (std::abs(v - r.lambda) > rel_tol * r.lambda) r.stationarity = false;
        } else if (w[k] * g[k] > r.lambda * (1.0 + rel_tol)) {
            r.complementary = false;
        }
    }
    r.budget_tight = std::abs(used - budget) <= budget_tol * budget;
    return r;
}

// Best objective over the product of two users' simplex grids (2 users, 2
// bands), then a few zoomed grids around the incumbent.
inline double grid_search_2x2(const vcell::CellProblem& prob, int divisions = 40, int refinements = 4) {
    const double b0 = prob.budgets_mw[0], b1 = prob.budgets_mw[1];
    // Closed-form 2x2 Hermitian determinant a*d - |b|^2 per band.
    struct Band {
        double w, n00, n11, det_n;
        cplx n01, u0, u1, v0, v1;
    };
    Band bands[2];
    for (std::size_t k = 0; k < 2; ++k) {
        const auto& nk = prob.noise_cov[k];
        bands[k] = {prob.band_widths_hz[k], nk(0, 0).real(), nk(1, 1).real(), 0.0, nk(1, 0),
                    prob.h[0][k](0), prob.h[0][k](1), prob.h[1][k](0), prob.h[1][k](1)};
        bands[k].det_n = bands[k].n00 * bands[k].n11 - std::norm(bands[k].n01);
    }
    auto eval = [&](double a0, double a1, double c0, double c1) {
        const double pu[2] = {a0, a1}, pv[2] = {c0, c1};
        double total = 0.0;
        for (int k = 0; k < 2; ++k) {
            const Band& b = bands[k];
            const double a = b.n00 + pu[k] * std::norm(b.u0) + pv[k] * std::norm(b.v0);
            const double d = b.n11 + pu[k] * std::norm(b.u1) + pv[k] * std::norm(b.v1);
            const cplx off = b.n01 + pu[k] * b.u1 * std::conj(b.u0) + pv[k] * b.v1 * std::conj(b.v0);
            total += b.w * std::log2((a * d - std::norm(off)) / b.det_n);
        }
        return total;
    };

    double best = -1.0;
    double x[4] = {0, 0, 0, 0};
    for (int i = 0; i <= divisions; ++i)
        for (int j = 0; i + j <= divisions; ++j)
            for (int k = 0; k <= divisions; ++k)
                for (int l = 0; k + l <= divisions; ++l) {
                    const double a0 = b0 * i / divisions, a1 = b0 * j / divisions;
                    const double c0 = b1 * k / divisions, c1 = b1 * l / divisions;
                    const double v = eval(a0, a1, c0, c1);
                    if (v > best) {
                        best = v;
                        x[0] = a0; x[1] = a1; x[2] = c0; x[3] = c1;
                    }
                }

    double step0 = b0 / divisions, step1 = b1 / divisions;
    for (int level = 0; level < refinements; ++level) {
        const int half = 8;
        const double s0 = step0 / half, s1 = step1 / half;
        const double cx[4] = {x[0], x[1], x[2], x[3]};
        for (int i = -half; i <= half; ++i)
            for (int j = -half; j <= half; ++j)
                for (int k = -half; k <= half; ++k)
                    for (int l = -half; l <= half; ++l) {
                        const double a0 = cx[0] + i * s0, a1 = cx[1] + j * s0;
                        const double c0 = cx[2] + k * s1, c1 = cx[3] + l * s1;
                        if (a0 < 0 || a1 < 0 || c0 < 0 || c1 < 0) continue;
                        if (a0 + a1 > b0 || c0 + c1 > b1) continue;
                        const double v = eval(a0, a1, c0, c1);
                        if (v > best) {
                            best = v;
                            x[0] = a0; x[1] = a1; x[2] = c0; x[3] = c1;
                        }
                    }
        step0 = s0;
        step1 = s1;
    }
    return best;
}

}  // namespace oracle
