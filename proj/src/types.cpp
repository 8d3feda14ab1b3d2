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

#include "qubitgp/types.hpp"

#include <string>

namespace qgp {

void QubitParams::validate() const {
    if (!(delta > 0.0)) {
        throw_invalid("qubit: delta must be > 0, got " + std::to_string(delta));
    }
    if (!(omega >= 0.0)) {
        throw_invalid("qubit: omega must be >= 0, got " + std::to_string(omega));
    }
}

double DensityMatrix::purity() const {
    return rho00 * rho00 + rho11 * rho11 + 2.0 * std::norm(rho01);
}

DensityMatrix DensityMatrix::ground_state() {
    return DensityMatrix{1.0, 0.0, Complex(0.0, 0.0)};
}

DensityMatrix density_from_bloch(const BlochVector& r) {
    if (r.norm() > 1.0 + 1e-8) {
        throw_state("bloch vector outside the unit ball: |r| = " + std::to_string(r.norm()));
    }
    DensityMatrix rho;
    rho.rho00 = 0.5 * (1.0 + r.z);
    rho.rho11 = 0.5 * (1.0 - r.z);
    rho.rho01 = 0.5 * Complex(r.x, -r.y);
    return rho;
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
    return BlochVector{2.0 * rho.rho01.real(), -2.0 * rho.rho01.imag(), rho.rho00 - rho.rho11};
}

namespace {

// Fix the global phase so the largest-magnitude component is real positive;
// ties resolve to the first component.
void fix_phase(Vec2& v) {
    const std::size_t idx = std::abs(v[0]) >= std::abs(v[1]) ? 0 : 1;
    const double mag = std::abs(v[idx]);
    if (mag == 0.0) {
        return;
    }
    const Complex rot = std::conj(v[idx]) / mag;
    v[0] *= rot;
    v[1] *= rot;
}

void normalize(Vec2& v) {
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= n;
    v[1] /= n;
}

} // namespace

EigenPair eig_hermitian_2x2(const DensityMatrix& rho) {
    const double a = rho.rho00;
    const double c = rho.rho11;
    const Complex b = rho.rho01;

    const double mean = 0.5 * (a + c);
    const double radius = std::hypot(0.5 * (a - c), std::abs(b));

    EigenPair out;
    out.eps1 = mean + radius;
    out.eps2 = mean - radius;
    out.degenerate = (out.eps1 - out.eps2) < 1e-12;

    if (out.degenerate || std::abs(b) == 0.0) {
        if (!out.degenerate && a < c) {
            out.v1 = Vec2{Complex(0.0), Complex(1.0)};
            out.v2 = Vec2{Complex(1.0), Complex(0.0)};
        } else {
            out.v1 = Vec2{Complex(1.0), Complex(0.0)};
            out.v2 = Vec2{Complex(0.0), Complex(1.0)};
        }
        return out;
    }

    // (eps1 - c, conj(b)) and (b, eps1 - a) both solve (rho - eps1)v = 0;
    // pick the better-conditioned one by the sign of a - c.
    Vec2 v1;
    if (a >= c) {
        v1 = Vec2{Complex(out.eps1 - c), std::conj(b)};
    } else {
        v1 = Vec2{b, Complex(out.eps1 - a)};
    }
    normalize(v1);
    Vec2 v2{-std::conj(v1[1]), std::conj(v1[0])};
    fix_phase(v1);
    fix_phase(v2);
    out.v1 = v1;
    out.v2 = v2;
    return out;
}

} // namespace qgp
