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

#pragma once

namespace qgp {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// Cosine integral Ci(x) = euler_gamma + ln x + int_0^x (cos t - 1)/t dt, x > 0.
double cosint(double x);

// Sine integral Si(x) = int_0^x sin t / t dt, x >= 0.
double sinint(double x);

namespace detail {
// Branch implementations, exposed so tests can probe the switchover point.
// Series branch is used for x <= 8, the continued fraction above.
double ci_series(double x);
double si_series(double x);
void sici_continued_fraction(double x, double* ci_out, double* si_out);
inline constexpr double kBranchSwitch = 8.0;
} // namespace detail

} // namespace qgp
