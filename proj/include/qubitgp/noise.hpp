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

// noise.hpp — Time-domain correlation kernels <dw_i(0) dw_i(-s)> for the
// three model families. Channel 0 couples through sigma_z (longitudinal),
// channel 1 through sigma_x (transverse).

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qubitgp/errors.hpp"

namespace qgp {

// Delta-correlated kernel: the finite-temperature Ohmic limit. The only
// nonzero master-equation coefficients are the constants
// D_zz = gamma0 * kbt and D_xx = gamma1 * kbt (pure dephasing).
struct DeltaNoise {
    double gamma0 = 0.0;
    double gamma1 = 0.0;
    double kbt = 1.0;
};

// Gaussian kernel Phi_i(s) = gamma_i * exp(-(alpha_i s)^2). Small alpha means
// slowly decaying correlations, i.e. low-frequency noise.
struct GaussianNoise {
    double gamma0 = 0.0;
    double gamma1 = 0.0;
    double alpha0 = 1.0;
    double alpha1 = 1.0;
};

enum class OneOverFRegime { zero_temperature, high_temperature };

// 1/f kernel with infrared cutoff lambda. At T = 0,
//   nu(s) = -gamma * lambda * Ci(lambda s)   (log-divergent but integrable at s = 0);
// in the high-temperature limit,
//   nu(s) = kbt * gamma * lambda * (-pi/2 s + cos(lambda s)/lambda + s Si(lambda s)).
// The same kernel feeds both coupling channels.
struct OneOverFNoise {
    double gamma = 0.0;
    double lambda = 1e-3;
    OneOverFRegime regime = OneOverFRegime::zero_temperature;
    double kbt = 1.0; // high-temperature regime only
};

using NoiseModel = std::variant<DeltaNoise, GaussianNoise, OneOverFNoise>;

void validate(const NoiseModel& model);
std::string model_name(const NoiseModel& model);

double kernel_gaussian(double gamma, double alpha, double s);
double kernel_one_over_f(const OneOverFNoise& model, double s);

// Pointwise kernels per coupling channel; the delta family is distributional
// and has no pointwise form (has_pointwise_kernel returns false).
bool has_pointwise_kernel(const NoiseModel& model);
double kernel_longitudinal(const NoiseModel& model, double s);
double kernel_transverse(const NoiseModel& model, double s);

// Named-parameter access for sweep axes and configuration.
std::vector<std::string> noise_parameter_names(const NoiseModel& model);
void set_noise_parameter(NoiseModel& model, const std::string& name, double value);
double get_noise_parameter(const NoiseModel& model, const std::string& name);

} // namespace qgp
