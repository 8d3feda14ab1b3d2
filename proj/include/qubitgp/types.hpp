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

// types.hpp — Qubit parameters, Bloch vectors, 2x2 density matrices and
// their Hermitian eigendecomposition. All value types; all functions pure.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "qubitgp/errors.hpp"

namespace qgp {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;

// Rotated-frame Hamiltonian parameters, H = (omega*sx + delta*sz)/2.
// Every frequency in the library is expressed in units of delta; delta is
// kept at 1 and is not configurable through the external interfaces.
struct QubitParams {
    double omega = 0.5; // Rabi coupling
    double delta = 1.0; // detuning, the base unit

    double splitting() const { return std::hypot(omega, delta); }
    double cycle_time() const { return 2.0 * std::numbers::pi / splitting(); }
    double cos_theta() const { return delta / splitting(); } // precession-cone tilt
    void validate() const;
};

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
};

// Hermitian by construction: real diagonal entries plus the upper
// off-diagonal element (rho10 is implicitly conj(rho01)).
struct DensityMatrix {
    double rho00 = 0.5;
    double rho11 = 0.5;
    Complex rho01 = 0.0;

    double trace() const { return rho00 + rho11; }
    double purity() const;

    static DensityMatrix ground_state(); // |0><0|, the north pole
};

// Eigenvalues descending; eigenvectors unit norm, mutually orthogonal, with
// the global phase fixed so the largest-magnitude component is real positive.
struct EigenPair {
    double eps1 = 0.0;
    double eps2 = 0.0;
    Vec2 v1{};
    Vec2 v2{};
    bool degenerate = false; // eps1 - eps2 < 1e-12; basis choice then arbitrary
};

DensityMatrix density_from_bloch(const BlochVector& r);
BlochVector bloch_from_density(const DensityMatrix& rho);
EigenPair eig_hermitian_2x2(const DensityMatrix& rho);

inline Complex inner(const Vec2& a, const Vec2& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

} // namespace qgp
