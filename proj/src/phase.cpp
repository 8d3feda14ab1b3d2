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

#include "qubitgp/phase.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "json.hpp"

#include "qubitgp/io.hpp"

namespace qgp {

double unitary_berry_phase(const QubitParams& p) {
    p.validate();
    return std::numbers::pi * (1.0 - p.cos_theta());
}

namespace {

double clamp_eigenvalue(double eps) {
    if (eps < -1e-8) {
        throw_state("geometric_phase: eigenvalue " + std::to_string(eps) + " below -1e-8");
    }
    return std::max(eps, 0.0);
}

Vec2 scaled(const Vec2& v, const Complex& factor) {
    return Vec2{v[0] * factor, v[1] * factor};
}

struct PhaseAccumulator {
    double phi = 0.0;
    double min_gap = std::numeric_limits<double>::infinity();
    bool degraded = false;
    int branch_swaps = 0;
};

// Walks the eigen sequence with the given stride (always touching the final
// sample), tracking branches by maximal overlap and re-phasing consecutive
// eigenvectors so every transport overlap is real positive.
PhaseAccumulator accumulate_phase(const std::vector<EigenPair>& eigs, std::size_t stride) {
    PhaseAccumulator acc;
    const std::size_t last = eigs.size() - 1;

    const EigenPair& first = eigs.front();
    acc.min_gap = first.eps1 - first.eps2;
    Vec2 prev1 = first.v1;
    Vec2 prev2 = first.v2;
    Vec2 trans1 = first.v1;
    Vec2 trans2 = first.v2;

    std::size_t j = 0;
    while (j < last) {
        j = std::min(j + stride, last);
        const EigenPair& e = eigs[j];
        Vec2 w1 = e.v1;
        Vec2 w2 = e.v2;

        const double keep = std::norm(inner(prev1, w1)) + std::norm(inner(prev2, w2));
        const double swap = std::norm(inner(prev1, w2)) + std::norm(inner(prev2, w1));
        if (swap > keep) {
            std::swap(w1, w2);
            ++acc.branch_swaps;
        }

        const Complex o1 = inner(trans1, w1);
        const Complex o2 = inner(trans2, w2);
        const double m1 = std::abs(o1);
        const double m2 = std::abs(o2);
        trans1 = m1 > 0.0 ? scaled(w1, std::conj(o1) / m1) : w1;
        trans2 = m2 > 0.0 ? scaled(w2, std::conj(o2) / m2) : w2;
        prev1 = w1;
        prev2 = w2;

        const double gap = e.eps1 - e.eps2;
        acc.min_gap = std::min(acc.min_gap, gap);
        if (gap < 1e-10) {
            acc.degraded = true;
        }
    }

    const double w1 = std::sqrt(clamp_eigenvalue(eigs.front().eps1) *
                                clamp_eigenvalue(eigs.back().eps1));
    const double w2 = std::sqrt(clamp_eigenvalue(eigs.front().eps2) *
                                clamp_eigenvalue(eigs.back().eps2));
    const Complex term = w1 * inner(eigs.front().v1, trans1) + w2 * inner(eigs.front().v2, trans2);
    acc.phi = std::arg(term);
    return acc;
}

} // namespace

GPResult geometric_phase_from_eigs(const std::vector<EigenPair>& eigs, const QubitParams& p) {
    if (eigs.size() < 3) {
        throw_invalid("geometric_phase: need at least 3 samples, got " +
                      std::to_string(eigs.size()));
    }
    if (eigs.front().eps1 - eigs.front().eps2 < 1e-12 ||
        eigs.back().eps1 - eigs.back().eps2 < 1e-12) {
        throw_state("geometric_phase: undefined phase, degenerate endpoint state");
    }
    clamp_eigenvalue(eigs.front().eps2);
    clamp_eigenvalue(eigs.back().eps2);

    const PhaseAccumulator full = accumulate_phase(eigs, 1);
    const PhaseAccumulator half = accumulate_phase(eigs, 2);

    GPResult out;
    out.phi = full.phi;
    out.min_gap = full.min_gap;
    out.degraded = full.degraded;
    out.branch_swaps = full.branch_swaps;
    out.converged = std::abs(full.phi - half.phi) < 1e-6;
    out.phi_unitary = unitary_berry_phase(p);
    out.ratio = out.phi_unitary != 0.0 ? std::abs(out.phi) / out.phi_unitary
                                       : std::numeric_limits<double>::quiet_NaN();
    return out;
}

GPResult geometric_phase(const Trajectory& traj) {
    std::vector<EigenPair> eigs;
    eigs.reserve(traj.states.size());
    for (const DensityMatrix& rho : traj.states) {
        eigs.push_back(eig_hermitian_2x2(rho));
    }
    return geometric_phase_from_eigs(eigs, traj.params);
}

GPResult gp_ratio(const QubitParams& p, const NoiseModel& n, const EvolveConfig& cfg) {
    EvolveConfig cycle_cfg = cfg;
    cycle_cfg.t_end = p.cycle_time();
    const Trajectory traj = evolve(p, n, DensityMatrix::ground_state(), cycle_cfg);
    return geometric_phase(traj);
}

std::string gp_result_to_json(const GPResult& r) {
    nlohmann::ordered_json j;
    j["phi"] = r.phi;
    j["phi_unitary"] = r.phi_unitary;
    j["ratio"] = r.ratio;
    j["min_gap"] = r.min_gap;
    j["converged"] = r.converged;
    return j.dump(2) + "\n";
}

} // namespace qgp
