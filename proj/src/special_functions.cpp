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

// Ci/Si to ~1e-13 relative: alternating power series below x = 8, and the
// modified-Lentz continued fraction for E1(ix) above (Ci = -Re E1(ix),
// Si = pi/2 + Im E1(ix)).

#include "qubitgp/special_functions.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qubitgp/errors.hpp"

namespace qgp {

namespace detail {

double ci_series(double x) {
    const double mx2 = -x * x;
    double factor = 1.0; // (-x^2)^k / (2k)!
    double sum = 0.0;
    for (int k = 1; k <= 80; ++k) {
        factor *= mx2 / ((2.0 * k - 1.0) * (2.0 * k));
        const double term = factor / (2.0 * k);
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) {
            break;
        }
    }
    return kEulerGamma + std::log(x) + sum;
}

double si_series(double x) {
    const double mx2 = -x * x;
    double factor = x; // (-1)^k x^(2k+1) / (2k+1)!
    double sum = x;
    for (int k = 1; k <= 80; ++k) {
        factor *= mx2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double term = factor / (2.0 * k + 1.0);
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) {
            break;
        }
    }
    return sum;
}

// E1(z) = exp(-z) / (z + 1 - 1^2/(z + 3 - 2^2/(z + 5 - ...))), evaluated by
// the modified Lentz algorithm at z = i x.
void sici_continued_fraction(double x, double* ci_out, double* si_out) {
    const std::complex<double> z(0.0, x);
    constexpr double tiny = 1e-290;
    std::complex<double> b = z + 1.0;
    std::complex<double> c = 1.0 / tiny;
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    bool converged = false;
    for (int i = 1; i <= 400; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const std::complex<double> delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw_numerical("sici: continued fraction did not converge at x = " + std::to_string(x));
    }
    const std::complex<double> e1 = h * std::exp(-z);
    *ci_out = -e1.real();
    *si_out = 0.5 * std::numbers::pi + e1.imag();
}

} // namespace detail

double cosint(double x) {
    if (!(x > 0.0)) {
        throw_domain("cosint: requires x > 0, got " + std::to_string(x));
    }
    if (x <= detail::kBranchSwitch) {
        return detail::ci_series(x);
    }
    double ci = 0.0;
    double si = 0.0;
    detail::sici_continued_fraction(x, &ci, &si);
    return ci;
}

double sinint(double x) {
    if (!(x >= 0.0)) {
        throw_domain("sinint: requires x >= 0, got " + std::to_string(x));
    }
    if (x <= detail::kBranchSwitch) {
        return detail::si_series(x);
    }
    double ci = 0.0;
    double si = 0.0;
    detail::sici_continued_fraction(x, &ci, &si);
    return si;
}

} // namespace qgp
