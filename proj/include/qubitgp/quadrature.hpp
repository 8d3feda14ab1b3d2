// Copyright 2026 the qubitgp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// quadrature.hpp — Adaptive Gauss-Kronrod 7-15 integration of vector-valued
// integrands. All nodes are interior points, so integrable endpoint
// singularities (the T = 0 1/f kernel at s = 0) are never evaluated.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "qubitgp/errors.hpp"

namespace qgp {

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_depth = 64;
};

namespace detail {

// Kronrod-15 abscissae (non-negative half) and weights, Gauss-7 weights.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <std::size_t N, typename F>
struct GKPanel {
    std::array<double, N> kronrod{};
    double error = 0.0; // max-norm of the Kronrod-Gauss difference, scaled

    static GKPanel evaluate(const F& fn, double a, double b) {
        const double center = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        GKPanel panel;
        std::array<double, N> gauss{};
        const std::array<double, N> fc = fn(center);
        for (std::size_t i = 0; i < N; ++i) {
            panel.kronrod[i] = kKronrodWeights[7] * fc[i];
            gauss[i] = kGaussWeights[3] * fc[i];
        }
        for (std::size_t j = 0; j < 7; ++j) {
            const std::array<double, N> lo = fn(center - half * kKronrodNodes[j]);
            const std::array<double, N> hi = fn(center + half * kKronrodNodes[j]);
            for (std::size_t i = 0; i < N; ++i) {
                panel.kronrod[i] += kKronrodWeights[j] * (lo[i] + hi[i]);
                if (j % 2 == 1) {
                    gauss[i] += kGaussWeights[(j - 1) / 2] * (lo[i] + hi[i]);
                }
            }
        }
        for (std::size_t i = 0; i < N; ++i) {
            panel.kronrod[i] *= half;
            gauss[i] *= half;
            panel.error = std::max(panel.error, std::abs(panel.kronrod[i] - gauss[i]));
        }
        return panel;
    }
};

template <std::size_t N, typename F>
void integrate_recurse(const F& fn, double a, double b, double tol, int depth,
                       const QuadratureOptions& opt, std::array<double, N>& acc,
                       double& err_acc) {
    const auto panel = GKPanel<N, F>::evaluate(fn, a, b);
    if (panel.error <= tol || depth >= opt.max_depth) {
        if (panel.error > tol) {
            throw_numerical("quadrature: panel [" + std::to_string(a) + ", " +
                            std::to_string(b) + "] error " + std::to_string(panel.error) +
                            " exceeds tolerance " + std::to_string(tol) + " at max depth " +
                            std::to_string(opt.max_depth));
        }
        for (std::size_t i = 0; i < N; ++i) {
            acc[i] += panel.kronrod[i];
        }
        err_acc += panel.error;
        return;
    }
    const double mid = 0.5 * (a + b);
    integrate_recurse<N>(fn, a, mid, 0.5 * tol, depth + 1, opt, acc, err_acc);
    integrate_recurse<N>(fn, mid, b, 0.5 * tol, depth + 1, opt, acc, err_acc);
}

} // namespace detail

// Integrates fn : double -> array<double, N> over [a, b]. The tolerance is
// max(abs_tol, rel_tol * |first whole-interval estimate|) split across
// bisections. Throws ErrorCode::numerical when max_depth cannot meet it.
template <std::size_t N, typename F>
std::array<double, N> integrate(const F& fn, double a, double b,
                                const QuadratureOptions& opt = {},
                                double* error_estimate = nullptr) {
    std::array<double, N> acc{};
    if (a == b) {
        if (error_estimate != nullptr) {
            *error_estimate = 0.0;
        }
        return acc;
    }
    const auto whole = detail::GKPanel<N, F>::evaluate(fn, a, b);
    double scale = 0.0;
    for (const double v : whole.kronrod) {
        scale = std::max(scale, std::abs(v));
    }
    const double tol = std::max(opt.abs_tol, opt.rel_tol * scale);
    double err = 0.0;
    detail::integrate_recurse<N>(fn, a, b, tol, 0, opt, acc, err);
    if (error_estimate != nullptr) {
        *error_estimate = err;
    }
    return acc;
}

// Scalar convenience wrapper.
template <typename F>
double integrate_scalar(const F& fn, double a, double b, const QuadratureOptions& opt = {},
                        double* error_estimate = nullptr) {
    const auto wrapped = [&fn](double s) { return std::array<double, 1>{fn(s)}; };
    return integrate<1>(wrapped, a, b, opt, error_estimate)[0];
}

} // namespace qgp
