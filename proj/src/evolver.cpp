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

#include "qubitgp/evolver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>

#include "qubitgp/io.hpp"

namespace qgp {

void EvolveConfig::validate() const {
    if (!(t_end > 0.0)) {
        throw_invalid("evolve: t_end must be > 0");
    }
    if (!(dt > 0.0)) {
        throw_invalid("evolve: dt must be > 0");
    }
    if (sample_every < 1) {
        throw_invalid("evolve: sample_every must be >= 1");
    }
    if (!(rel_tol > 0.0)) {
        throw_invalid("evolve: rel_tol must be > 0");
    }
    if (table_points_per_cycle < 64) {
        throw_invalid("evolve: table_points_per_cycle must be >= 64");
    }
}

EvolveConfig EvolveConfig::for_cycles(const QubitParams& p, double cycles,
                                      long steps_per_cycle) {
    p.validate();
    if (!(cycles > 0.0) || steps_per_cycle < 1) {
        throw_invalid("evolve: cycles must be > 0 and steps_per_cycle >= 1");
    }
    EvolveConfig cfg;
    const double tau = p.cycle_time();
    cfg.t_end = cycles * tau;
    cfg.dt = tau / static_cast<double>(steps_per_cycle);
    return cfg;
}

namespace {

using Mat2 = std::array<std::array<Complex, 2>, 2>;

constexpr Complex kI(0.0, 1.0);

Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    return r;
}

Mat2 commutator(const Mat2& a, const Mat2& b) {
    const Mat2 ab = mul(a, b);
    const Mat2 ba = mul(b, a);
    Mat2 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r[i][j] = ab[i][j] - ba[i][j];
        }
    }
    return r;
}

const Mat2 kSx{{{Complex(0.0), Complex(1.0)}, {Complex(1.0), Complex(0.0)}}};
const Mat2 kSy{{{Complex(0.0), -kI}, {kI, Complex(0.0)}}};
const Mat2 kSz{{{Complex(1.0), Complex(0.0)}, {Complex(0.0), Complex(-1.0)}}};

Mat2 to_mat(const DensityMatrix& rho) {
    return Mat2{{{Complex(rho.rho00), rho.rho01}, {std::conj(rho.rho01), Complex(rho.rho11)}}};
}

} // namespace

DensityDerivative master_rhs(const QubitParams& p, const DiffusionCoeffs& c,
                             const DensityMatrix& rho) {
    const Mat2 m = to_mat(rho);
    Mat2 h{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            h[i][j] = 0.5 * (p.omega * kSx[i][j] + p.delta * kSz[i][j]);
        }
    }

    Mat2 d = commutator(h, m);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            d[i][j] *= -kI;
        }
    }

    const std::array<std::pair<const Mat2*, const Mat2*>, 6> pairs = {{
        {&kSx, &kSx}, {&kSx, &kSy}, {&kSx, &kSz}, {&kSz, &kSx}, {&kSz, &kSy}, {&kSz, &kSz},
    }};
    const std::array<double, 6> coeff = c.as_array();
    for (std::size_t k = 0; k < 6; ++k) {
        if (coeff[k] == 0.0) {
            continue;
        }
        const Mat2 dc = commutator(*pairs[k].first, commutator(*pairs[k].second, m));
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                d[i][j] -= coeff[k] * dc[i][j];
            }
        }
    }

    // Hermitian compensation: the analytic derivative is Hermitian; discard
    // the roundoff-sized anti-Hermitian residue.
    DensityDerivative out;
    out.d00 = d[0][0].real();
    out.d11 = d[1][1].real();
    out.d01 = 0.5 * (d[0][1] + std::conj(d[1][0]));
    return out;
}

std::array<std::array<double, 3>, 3> bloch_generator(const QubitParams& p,
                                                     const DiffusionCoeffs& c) {
    return {{
        {-4.0 * c.dzz, -p.delta, 4.0 * c.fzx},
        {p.delta + 4.0 * c.fxy, -4.0 * (c.dxx + c.dzz), -p.omega + 4.0 * c.fzy},
        {4.0 * c.fxz, p.omega, -4.0 * c.dxx},
    }};
}

namespace {

// Integration state: 4 reals (p00, p11, Re p01, Im p01) for the matrix form,
// first 3 reals (x, y, z) for the Bloch form.
using State = std::array<double, 4>;

State add_scaled(const State& y, double h, const State& d, std::size_t dim) {
    State r = y;
    for (std::size_t i = 0; i < dim; ++i) {
        r[i] = y[i] + h * d[i];
    }
    return r;
}

struct Rhs {
    const QubitParams& p;
    std::function<DiffusionCoeffs(double)> coeffs;
    RhsForm form;

    std::size_t dim() const { return form == RhsForm::matrix ? 4 : 3; }

    State operator()(double t, const State& y) const {
        const DiffusionCoeffs c = coeffs(t);
        if (form == RhsForm::matrix) {
            const DensityMatrix rho{y[0], y[1], Complex(y[2], y[3])};
            const DensityDerivative d = master_rhs(p, c, rho);
            return {d.d00, d.d11, d.d01.real(), d.d01.imag()};
        }
        const auto a = bloch_generator(p, c);
        State r{};
        for (int i = 0; i < 3; ++i) {
            r[i] = a[i][0] * y[0] + a[i][1] * y[1] + a[i][2] * y[2];
        }
        return r;
    }
};

State rk4_step(const Rhs& rhs, double t, const State& y, double h) {
    const std::size_t dim = rhs.dim();
    const State k1 = rhs(t, y);
    const State k2 = rhs(t + 0.5 * h, add_scaled(y, 0.5 * h, k1, dim));
    const State k3 = rhs(t + 0.5 * h, add_scaled(y, 0.5 * h, k2, dim));
    const State k4 = rhs(t + h, add_scaled(y, h, k3, dim));
    State out = y;
    for (std::size_t i = 0; i < dim; ++i) {
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

// Dormand-Prince 5(4) with standard PI-free step control; integrates to
// exactly t_target.
State rk45_advance(const Rhs& rhs, double t, double t_target, State y, double rel_tol) {
    const std::size_t dim = rhs.dim();
    constexpr double kAbsTol = 1e-12;
    double h = t_target - t;
    int guard = 0;
    while (t < t_target) {
        if (++guard > 1000000) {
            throw_numerical("rk45: step count exceeded near t = " + std::to_string(t));
        }
        h = std::min(h, t_target - t);
        const State k1 = rhs(t, y);
        const State y2 = add_scaled(y, h * (1.0 / 5.0), k1, dim);
        const State k2 = rhs(t + h / 5.0, y2);
        State y3 = y;
        for (std::size_t i = 0; i < dim; ++i) {
            y3[i] = y[i] + h * (3.0 / 40.0 * k1[i] + 9.0 / 40.0 * k2[i]);
        }
        const State k3 = rhs(t + 3.0 / 10.0 * h, y3);
        State y4 = y;
        for (std::size_t i = 0; i < dim; ++i) {
            y4[i] = y[i] + h * (44.0 / 45.0 * k1[i] - 56.0 / 15.0 * k2[i] + 32.0 / 9.0 * k3[i]);
        }
        const State k4 = rhs(t + 4.0 / 5.0 * h, y4);
        State y5 = y;
        for (std::size_t i = 0; i < dim; ++i) {
            y5[i] = y[i] + h * (19372.0 / 6561.0 * k1[i] - 25360.0 / 2187.0 * k2[i] +
                                64448.0 / 6561.0 * k3[i] - 212.0 / 729.0 * k4[i]);
        }
        const State k5 = rhs(t + 8.0 / 9.0 * h, y5);
        State y6 = y;
        for (std::size_t i = 0; i < dim; ++i) {
            y6[i] = y[i] + h * (9017.0 / 3168.0 * k1[i] - 355.0 / 33.0 * k2[i] +
                                46732.0 / 5247.0 * k3[i] + 49.0 / 176.0 * k4[i] -
                                5103.0 / 18656.0 * k5[i]);
        }
        const State k6 = rhs(t + h, y6);
        State y_next = y;
        for (std::size_t i = 0; i < dim; ++i) {
            y_next[i] = y[i] + h * (35.0 / 384.0 * k1[i] + 500.0 / 1113.0 * k3[i] +
                                    125.0 / 192.0 * k4[i] - 2187.0 / 6784.0 * k5[i] +
                                    11.0 / 84.0 * k6[i]);
        }
        const State k7 = rhs(t + h, y_next);
        double err = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double y4th = y[i] + h * (5179.0 / 57600.0 * k1[i] + 7571.0 / 16695.0 * k3[i] +
                                            393.0 / 640.0 * k4[i] - 92097.0 / 339200.0 * k5[i] +
                                            187.0 / 2100.0 * k6[i] + 1.0 / 40.0 * k7[i]);
            const double scale = kAbsTol + rel_tol * std::max(std::abs(y[i]), std::abs(y_next[i]));
            err = std::max(err, std::abs(y_next[i] - y4th) / scale);
        }
        if (err <= 1.0) {
            t += h;
            y = y_next;
        }
        const double factor = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
        h *= factor;
        if (!(h > 0.0)) {
            throw_numerical("rk45: step size underflow at t = " + std::to_string(t));
        }
    }
    return y;
}

void check_state(const State& y, RhsForm form, double t) {
    if (form == RhsForm::matrix) {
        const double trace = y[0] + y[1];
        if (std::abs(trace - 1.0) > 1e-9) {
            throw_numerical("evolve: trace drifted to " + std::to_string(trace) + " at t = " +
                            std::to_string(t));
        }
        const double radius = std::hypot(0.5 * (y[0] - y[1]), std::hypot(y[2], y[3]));
        const double min_eig = 0.5 * trace - radius;
        if (min_eig < -1e-8) {
            throw_state("evolve: eigenvalue " + std::to_string(min_eig) +
                        " below -1e-8 at t = " + std::to_string(t));
        }
    } else {
        const double n2 = y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
        // min eigenvalue (1 - |R|)/2 below -1e-8 means |R| > 1 + 2e-8
        if (n2 > (1.0 + 2e-8) * (1.0 + 2e-8)) {
            throw_state("evolve: Bloch norm " + std::to_string(std::sqrt(n2)) +
                        " above 1 at t = " + std::to_string(t));
        }
    }
}

DensityMatrix state_to_density(const State& y, RhsForm form) {
    if (form == RhsForm::matrix) {
        return DensityMatrix{y[0], y[1], Complex(y[2], y[3])};
    }
    return density_from_bloch(BlochVector{y[0], y[1], y[2]});
}

} // namespace

Trajectory evolve(const QubitParams& p, const NoiseModel& n, const DensityMatrix& rho0,
                  const EvolveConfig& cfg, const CoeffTable* shared_table) {
    p.validate();
    validate(n);
    cfg.validate();
    if (std::abs(rho0.trace() - 1.0) > 1e-9) {
        throw_state("evolve: initial state trace " + std::to_string(rho0.trace()));
    }
    const EigenPair e0 = eig_hermitian_2x2(rho0);
    if (e0.eps2 < -1e-8) {
        throw_state("evolve: initial state has eigenvalue " + std::to_string(e0.eps2));
    }

    const long n_steps = std::max<long>(1, std::lround(cfg.t_end / cfg.dt));
    if (n_steps % cfg.sample_every != 0) {
        throw_invalid("evolve: sample_every (" + std::to_string(cfg.sample_every) +
                      ") must divide the step count (" + std::to_string(n_steps) + ")");
    }
    const double h = cfg.t_end / static_cast<double>(n_steps);

    CoeffTable local_table;
    std::function<DiffusionCoeffs(double)> coeffs;
    if (std::holds_alternative<DeltaNoise>(n) || !cfg.use_table) {
        coeffs = [&p, &n](double t) { return diffusion_coefficients(p, n, t); };
    } else if (shared_table != nullptr) {
        if (shared_table->t_end() < cfg.t_end * (1.0 - 1e-12)) {
            throw_invalid("evolve: shared table does not cover t_end");
        }
        coeffs = [shared_table](double t) { return shared_table->at(t); };
    } else {
        const double tau = p.cycle_time();
        const auto npts = std::max<std::size_t>(
            64, static_cast<std::size_t>(std::ceil(
                    static_cast<double>(cfg.table_points_per_cycle) * cfg.t_end / tau)) +
                    1);
        local_table = build_coeff_table(p, n, cfg.t_end, npts);
        coeffs = [&local_table](double t) { return local_table.at(t); };
    }

    const Rhs rhs{p, coeffs, cfg.form};
    State y{};
    if (cfg.form == RhsForm::matrix) {
        y = {rho0.rho00, rho0.rho11, rho0.rho01.real(), rho0.rho01.imag()};
    } else {
        const BlochVector r = bloch_from_density(rho0);
        y = {r.x, r.y, r.z, 0.0};
    }

    Trajectory traj;
    traj.params = p;
    traj.noise = n;
    traj.times.reserve(static_cast<std::size_t>(n_steps / cfg.sample_every) + 1);
    traj.states.reserve(traj.times.capacity());
    traj.times.push_back(0.0);
    traj.states.push_back(rho0);

    if (cfg.stepper == Stepper::rk4) {
        for (long k = 0; k < n_steps; ++k) {
            const double t = h * static_cast<double>(k);
            y = rk4_step(rhs, t, y, h);
            const double t_next = (k + 1 == n_steps) ? cfg.t_end : h * static_cast<double>(k + 1);
            check_state(y, cfg.form, t_next);
            if ((k + 1) % cfg.sample_every == 0) {
                traj.times.push_back(t_next);
                traj.states.push_back(state_to_density(y, cfg.form));
            }
        }
    } else {
        const long n_samples = n_steps / cfg.sample_every;
        const double dt_sample = cfg.t_end / static_cast<double>(n_samples);
        double t = 0.0;
        for (long j = 1; j <= n_samples; ++j) {
            const double t_next = (j == n_samples) ? cfg.t_end : dt_sample * static_cast<double>(j);
            y = rk45_advance(rhs, t, t_next, y, cfg.rel_tol);
            check_state(y, cfg.form, t_next);
            traj.times.push_back(t_next);
            traj.states.push_back(state_to_density(y, cfg.form));
            t = t_next;
        }
    }
    return traj;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
    out << "t,rx,ry,rz,purity,eps1,eps2\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const DensityMatrix& rho = traj.states[i];
        const BlochVector r = bloch_from_density(rho);
        const EigenPair e = eig_hermitian_2x2(rho);
        out << format_double(traj.times[i]) << ',' << format_double(r.x) << ','
            << format_double(r.y) << ',' << format_double(r.z) << ','
            << format_double(rho.purity()) << ',' << format_double(e.eps1) << ','
            << format_double(e.eps2) << '\n';
    }
}

} // namespace qgp
