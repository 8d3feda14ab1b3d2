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

// dissipators.hpp — Closed-form Heisenberg coefficient functions and the six
// time-dependent master-equation coefficients, computed by quadrature against
// the active noise kernel, with a precomputed-table fast path.

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qubitgp/noise.hpp"
#include "qubitgp/types.hpp"

namespace qgp {

// Expansion coefficients of the Heisenberg-picture Pauli operators:
// sigma evolved under H = (omega*sx + delta*sz)/2, argument 2 t sqrt(w^2+d^2).
// (x1,y1,z1) and (x0,y0,z0) are rows of a rotation; z1 == x0 identically.
struct HeisenbergCoeffs {
    double x1 = 1.0;
    double y1 = 0.0;
    double z1 = 0.0;
    double x0 = 0.0;
    double y0 = 0.0;
    double z0 = 1.0;
};

HeisenbergCoeffs heisenberg_functions(const QubitParams& p, double t);

// Normal (dxx, dzz) and anomalous (f_ab) diffusion coefficients at time t:
//   dxx = int_0^t Phi_1(s) X1(-s) ds, fxy = int Phi_1 Y1(-s), fxz = int Phi_1 Z1(-s),
//   fzx = int_0^t Phi_0(s) X0(-s) ds, fzy = int Phi_0 Y0(-s), dzz = int Phi_0 Z0(-s).
// Y is odd in its argument, X and Z even; the -s argument is applied literally.
struct DiffusionCoeffs {
    double dxx = 0.0;
    double fxy = 0.0;
    double fxz = 0.0;
    double fzx = 0.0;
    double fzy = 0.0;
    double dzz = 0.0;

    std::array<double, 6> as_array() const { return {dxx, fxy, fxz, fzx, fzy, dzz}; }
};

// Direct adaptive quadrature (abs 1e-12 / rel 1e-10). The delta model
// short-circuits to its constant closed form.
DiffusionCoeffs diffusion_coefficients(const QubitParams& p, const NoiseModel& n, double t);

// Cubic-interpolated coefficient cache on a uniform grid over [0, t_end].
// Lookup agrees with direct quadrature to 1e-8 anywhere in range.
class CoeffTable {
  public:
    CoeffTable() = default;

    DiffusionCoeffs at(double t) const;
    double t_end() const { return t_end_; }
    std::size_t size() const { return npts_; }

    // CSV dump, columns: t,dxx,fxy,fxz,fzx,fzy,dzz
    void write_csv(std::ostream& out) const;

    friend CoeffTable build_coeff_table(const QubitParams& p, const NoiseModel& n, double t_end,
                                        std::size_t npts);

  private:
    double t_end_ = 0.0;
    double dt_ = 0.0;
    std::size_t npts_ = 0;
    bool constant_ = false; // delta model: rows are the closed-form constants
    DiffusionCoeffs constants_{};
    std::array<std::vector<double>, 6> rows_{};
};

inline constexpr std::size_t kDefaultTablePointsPerCycle = 4096;

// npts >= 64 required. Throws on invalid parameters or quadrature failure.
CoeffTable build_coeff_table(const QubitParams& p, const NoiseModel& n, double t_end,
                             std::size_t npts);

} // namespace qgp
