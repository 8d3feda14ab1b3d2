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

// evolver.hpp — Right-hand side of the master equation and its fixed- or
// adaptive-step integration into sampled trajectories of rho(t).
//
// Two equivalent code paths are kept deliberately: the matrix form works on
// literal 2x2 complex commutators, the Bloch form on the real 3x3 generator.
// They are cross-checked against each other in the tests.

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qubitgp/dissipators.hpp"
#include "qubitgp/noise.hpp"
#include "qubitgp/types.hpp"

namespace qgp {

enum class Stepper { rk4, rk45 };
enum class RhsForm { matrix, bloch };

struct EvolveConfig {
    double t_end = 0.0;      // required > 0
    double dt = 0.0;         // fixed step; rounded to an integer step count
    long sample_every = 1;   // store every k-th step (must divide the step count)
    bool use_table = true;   // coefficient table vs direct quadrature in the RHS
    Stepper stepper = Stepper::rk4;
    RhsForm form = RhsForm::matrix;
    double rel_tol = 1e-10;  // rk45 step control
    std::size_t table_points_per_cycle = kDefaultTablePointsPerCycle;

    void validate() const;

    // One unitary cycle at the default resolution of 1e4 steps per cycle.
    static EvolveConfig for_cycles(const QubitParams& p, double cycles,
                                   long steps_per_cycle = 10000);
};

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    QubitParams params;
    NoiseModel noise;

    const DensityMatrix& final_state() const { return states.back(); }
    double final_time() const { return times.back(); }
};

// Hermitian, traceless derivative of the density matrix.
struct DensityDerivative {
    double d00 = 0.0;
    double d11 = 0.0;
    Complex d01 = 0.0;
};

// Literal matrix form: -i[H,rho] minus the six double-commutator terms.
DensityDerivative master_rhs(const QubitParams& p, const DiffusionCoeffs& c,
                             const DensityMatrix& rho);

// Bloch-vector generator A(t) with R' = A R (no affine part; the equation is
// unital in the Bloch sense).
std::array<std::array<double, 3>, 3> bloch_generator(const QubitParams& p,
                                                     const DiffusionCoeffs& c);

// Integrates rho(0) = rho0 over [0, t_end]. Monitors the state invariants at
// every accepted step and throws ErrorCode::state / numerical with a time
// stamp when they break beyond tolerance. An externally built table may be
// passed to share quadrature work across calls (it must cover [0, t_end]).
Trajectory evolve(const QubitParams& p, const NoiseModel& n, const DensityMatrix& rho0,
                  const EvolveConfig& cfg, const CoeffTable* shared_table = nullptr);

// CSV contract: columns t,rx,ry,rz,purity,eps1,eps2.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

} // namespace qgp
