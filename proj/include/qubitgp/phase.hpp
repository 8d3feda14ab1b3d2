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

// phase.hpp — Mixed-state geometric phase extracted from a sampled trajectory
// via gauge-continuous eigenvector tracking, plus the closed-form unitary
// reference.
//
// The phase functional is arg sum_k sqrt(eps_k(0) eps_k(T)) <Psi_k(0)|Psi_k(T)>
// with each eigenbranch carried in the parallel-transport gauge (consecutive
// overlaps re-phased real positive), which nullifies the connection term.
// For this Hamiltonian orientation and rho(0) = |0><0| the functional yields
// -pi(1 - cos(theta)) in the noiseless limit, while phi_unitary below is the
// positive textbook value, so `ratio` compares magnitudes.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qubitgp/evolver.hpp"
#include "qubitgp/types.hpp"

namespace qgp {

struct GPResult {
    double phi = 0.0;         // radians, in (-pi, pi]
    double phi_unitary = 0.0; // pi (1 - cos theta), reference Berry phase
    double ratio = 0.0;       // |phi| / phi_unitary (NaN when phi_unitary == 0)
    double min_gap = 0.0;     // minimum eigenvalue gap along the path
    bool converged = false;   // sample-halving changed phi by < 1e-6
    bool degraded = false;    // near-degeneracy (gap < 1e-10) hit mid-path
    int branch_swaps = 0;     // overlap-assignment permutations applied
};

// pi (1 - delta / sqrt(delta^2 + omega^2)).
double unitary_berry_phase(const QubitParams& p);

GPResult geometric_phase(const Trajectory& traj);

// Same functional on a pre-decomposed eigen sequence; lets callers re-phase
// or perturb eigenvectors (the result is invariant under per-sample phases).
GPResult geometric_phase_from_eigs(const std::vector<EigenPair>& eigs, const QubitParams& p);

// Composes evolve + geometric_phase + the unitary reference over one cycle
// (t_end is forced to the cycle time; remaining cfg fields are honored).
GPResult gp_ratio(const QubitParams& p, const NoiseModel& n, const EvolveConfig& cfg);

// JSON contract: object with fields phi, phi_unitary, ratio, min_gap, converged.
std::string gp_result_to_json(const GPResult& r);

} // namespace qgp
