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

#include "qubitgp/dissipators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "qubitgp/io.hpp"
#include "qubitgp/quadrature.hpp"

namespace qgp {

HeisenbergCoeffs heisenberg_functions(const QubitParams& p, double t) {
    const double w2 = p.omega * p.omega;
    const double d2 = p.delta * p.delta;
    const double e2 = w2 + d2;
    const double e = std::sqrt(e2);
    const double c = std::cos(2.0 * t * e);
    const double s = std::sin(2.0 * t * e);
    HeisenbergCoeffs h;
    h.x1 = (w2 + d2 * c) / e2;
    h.y1 = p.delta * s / e;
    h.z1 = p.omega * p.delta * (1.0 - c) / e2;
    h.x0 = h.z1;
    h.y0 = -p.omega * s / e;
    h.z0 = 1.0 - w2 * (1.0 - c) / e2;
    return h;
}

namespace {

DiffusionCoeffs delta_constants(const DeltaNoise& m) {
    DiffusionCoeffs c;
    c.dxx = m.gamma1 * m.kbt;
    c.dzz = m.gamma0 * m.kbt;
    return c;
}

// Integrand of all six coefficients at lag s: the transverse kernel weights
// (X1, Y1, Z1)(-s) and the longitudinal kernel weights (X0, Y0, Z0)(-s).
std::array<double, 6> coefficient_integrand(const QubitParams& p, const NoiseModel& n, double s) {
    const HeisenbergCoeffs g = heisenberg_functions(p, -s);
    const double k1 = kernel_transverse(n, s);
    const double k0 = kernel_longitudinal(n, s);
    return {k1 * g.x1, k1 * g.y1, k1 * g.z1, k0 * g.x0, k0 * g.y0, k0 * g.z0};
}

DiffusionCoeffs from_array(const std::array<double, 6>& v) {
    return DiffusionCoeffs{v[0], v[1], v[2], v[3], v[4], v[5]};
}

} // namespace

DiffusionCoeffs diffusion_coefficients(const QubitParams& p, const NoiseModel& n, double t) {
    p.validate();
    validate(n);
    if (!(t >= 0.0)) {
        throw_invalid("diffusion_coefficients: t must be >= 0, got " + std::to_string(t));
    }
    if (t == 0.0) {
        return DiffusionCoeffs{};
    }
    if (const auto* m = std::get_if<DeltaNoise>(&n)) {
        return delta_constants(*m);
    }
    QuadratureOptions opt;
    opt.abs_tol = 1e-12;
    opt.rel_tol = 1e-10;
    const auto fn = [&](double s) { return coefficient_integrand(p, n, s); };
    return from_array(integrate<6>(fn, 0.0, t, opt));
}

CoeffTable build_coeff_table(const QubitParams& p, const NoiseModel& n, double t_end,
                             std::size_t npts) {
    p.validate();
    validate(n);
    if (!(t_end > 0.0)) {
        throw_invalid("build_coeff_table: t_end must be > 0");
    }
    if (npts < 64) {
        throw_invalid("build_coeff_table: npts must be >= 64, got " + std::to_string(npts));
    }

    CoeffTable table;
    table.t_end_ = t_end;
    table.npts_ = npts;
    table.dt_ = t_end / static_cast<double>(npts - 1);

    if (const auto* m = std::get_if<DeltaNoise>(&n)) {
        table.constant_ = true;
        table.constants_ = delta_constants(*m);
        return table;
    }

    for (auto& row : table.rows_) {
        row.assign(npts, 0.0);
    }

    // Incremental panels keep the cumulative quadrature cost linear in npts.
    // Per-panel tolerance is budgeted so the accumulated absolute error stays
    // well under the 1e-8 lookup contract.
    QuadratureOptions opt;
    opt.abs_tol = std::min(1e-13, 1e-9 / static_cast<double>(npts));
    opt.rel_tol = 1e-11;
    const auto fn = [&](double s) { return coefficient_integrand(p, n, s); };

    std::array<double, 6> acc{};
    for (std::size_t k = 1; k < npts; ++k) {
        const double a = table.dt_ * static_cast<double>(k - 1);
        const double b = (k == npts - 1) ? t_end : table.dt_ * static_cast<double>(k);
        const auto panel = integrate<6>(fn, a, b, opt);
        for (std::size_t i = 0; i < 6; ++i) {
            acc[i] += panel[i];
            table.rows_[i][k] = acc[i];
        }
    }
    return table;
}

DiffusionCoeffs CoeffTable::at(double t) const {
    if (npts_ == 0) {
        throw_state("CoeffTable: empty table");
    }
    if (t < 0.0 || t > t_end_ * (1.0 + 1e-12) + 1e-300) {
        throw_invalid("CoeffTable: t = " + std::to_string(t) + " outside [0, " +
                      std::to_string(t_end_) + "]");
    }
    if (t == 0.0) {
        return DiffusionCoeffs{};
    }
    if (constant_) {
        return constants_;
    }

    // 4-point Lagrange cubic on the uniform grid, stencil clamped at the edges.
    const double pos = std::min(t, t_end_) / dt_;
    const auto n = static_cast<std::ptrdiff_t>(npts_);
    std::ptrdiff_t k = static_cast<std::ptrdiff_t>(pos);
    k = std::clamp<std::ptrdiff_t>(k - 1, 0, n - 4);
    const double u = pos - static_cast<double>(k);

    // Lagrange basis at offsets 0,1,2,3
    const double l0 = -(u - 1.0) * (u - 2.0) * (u - 3.0) / 6.0;
    const double l1 = u * (u - 2.0) * (u - 3.0) / 2.0;
    const double l2 = -u * (u - 1.0) * (u - 3.0) / 2.0;
    const double l3 = u * (u - 1.0) * (u - 2.0) / 6.0;

    std::array<double, 6> v{};
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& row = rows_[i];
        v[i] = l0 * row[k] + l1 * row[k + 1] + l2 * row[k + 2] + l3 * row[k + 3];
    }
    return DiffusionCoeffs{v[0], v[1], v[2], v[3], v[4], v[5]};
}

void CoeffTable::write_csv(std::ostream& out) const {
    out << "t,dxx,fxy,fxz,fzx,fzy,dzz\n";
    for (std::size_t k = 0; k < npts_; ++k) {
        const double t = (k == npts_ - 1) ? t_end_ : dt_ * static_cast<double>(k);
        const DiffusionCoeffs c = at(t);
        out << format_double(t) << ',' << format_double(c.dxx) << ',' << format_double(c.fxy)
            << ',' << format_double(c.fxz) << ',' << format_double(c.fzx) << ','
            << format_double(c.fzy) << ',' << format_double(c.dzz) << '\n';
    }
}

} // namespace qgp
