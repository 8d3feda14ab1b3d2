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

#include "qubitgp/noise.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qubitgp/special_functions.hpp"

namespace qgp {

namespace {

void require_nonneg(double v, const char* name) {
    if (!(v >= 0.0)) {
        throw_invalid(std::string("noise: ") + name + " must be >= 0, got " + std::to_string(v));
    }
}

void require_pos(double v, const char* name) {
    if (!(v > 0.0)) {
        throw_invalid(std::string("noise: ") + name + " must be > 0, got " + std::to_string(v));
    }
}

} // namespace

void validate(const NoiseModel& model) {
    std::visit(
        [](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, DeltaNoise>) {
                require_nonneg(m.gamma0, "gamma0");
                require_nonneg(m.gamma1, "gamma1");
                require_nonneg(m.kbt, "kbt");
            } else if constexpr (std::is_same_v<T, GaussianNoise>) {
                require_nonneg(m.gamma0, "gamma0");
                require_nonneg(m.gamma1, "gamma1");
                require_pos(m.alpha0, "alpha0");
                require_pos(m.alpha1, "alpha1");
            } else {
                require_nonneg(m.gamma, "gamma");
                require_pos(m.lambda, "lambda");
                require_nonneg(m.kbt, "kbt");
            }
        },
        model);
}

std::string model_name(const NoiseModel& model) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, DeltaNoise>) {
                return "delta";
            } else if constexpr (std::is_same_v<T, GaussianNoise>) {
                return "gaussian";
            } else {
                return m.regime == OneOverFRegime::zero_temperature ? "one_over_f_zero_t"
                                                                    : "one_over_f_high_t";
            }
        },
        model);
}

double kernel_gaussian(double gamma, double alpha, double s) {
    if (!(alpha > 0.0)) {
        throw_domain("kernel_gaussian: alpha must be > 0");
    }
    const double u = alpha * s;
    return gamma * std::exp(-u * u);
}

double kernel_one_over_f(const OneOverFNoise& model, double s) {
    if (model.regime == OneOverFRegime::zero_temperature) {
        if (!(s > 0.0)) {
            throw_domain("kernel_one_over_f: T = 0 kernel requires s > 0, got " +
                         std::to_string(s));
        }
        return -model.gamma * model.lambda * cosint(model.lambda * s);
    }
    if (!(s >= 0.0)) {
        throw_domain("kernel_one_over_f: requires s >= 0, got " + std::to_string(s));
    }
    if (s == 0.0) {
        return model.kbt * model.gamma; // cos term limit
    }
    const double ls = model.lambda * s;
    const double bracket =
        -0.5 * std::numbers::pi * s + std::cos(ls) / model.lambda + s * sinint(ls);
    return model.kbt * model.gamma * model.lambda * bracket;
}

bool has_pointwise_kernel(const NoiseModel& model) {
    return !std::holds_alternative<DeltaNoise>(model);
}

double kernel_longitudinal(const NoiseModel& model, double s) {
    return std::visit(
        [s](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, DeltaNoise>) {
                throw_domain("kernel_longitudinal: delta kernel has no pointwise form");
            } else if constexpr (std::is_same_v<T, GaussianNoise>) {
                return kernel_gaussian(m.gamma0, m.alpha0, s);
            } else {
                return kernel_one_over_f(m, s);
            }
        },
        model);
}

double kernel_transverse(const NoiseModel& model, double s) {
    return std::visit(
        [s](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, DeltaNoise>) {
                throw_domain("kernel_transverse: delta kernel has no pointwise form");
            } else if constexpr (std::is_same_v<T, GaussianNoise>) {
                return kernel_gaussian(m.gamma1, m.alpha1, s);
            } else {
                return kernel_one_over_f(m, s);
            }
        },
        model);
}

namespace {

double* parameter_slot(NoiseModel& model, const std::string& name) {
    return std::visit(
        [&name](auto& m) -> double* {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, DeltaNoise>) {
                if (name == "gamma0") return &m.gamma0;
                if (name == "gamma1") return &m.gamma1;
                if (name == "kbt") return &m.kbt;
            } else if constexpr (std::is_same_v<T, GaussianNoise>) {
                if (name == "gamma0") return &m.gamma0;
                if (name == "gamma1") return &m.gamma1;
                if (name == "alpha0") return &m.alpha0;
                if (name == "alpha1") return &m.alpha1;
            } else {
                if (name == "gamma") return &m.gamma;
                if (name == "lambda") return &m.lambda;
                if (name == "kbt") return &m.kbt;
            }
            return nullptr;
        },
        model);
}

} // namespace

std::vector<std::string> noise_parameter_names(const NoiseModel& model) {
    if (std::holds_alternative<DeltaNoise>(model)) {
        return {"gamma0", "gamma1", "kbt"};
    }
    if (std::holds_alternative<GaussianNoise>(model)) {
        return {"gamma0", "gamma1", "alpha0", "alpha1"};
    }
    return {"gamma", "lambda", "kbt"};
}

void set_noise_parameter(NoiseModel& model, const std::string& name, double value) {
    double* slot = parameter_slot(model, name);
    if (slot == nullptr) {
        throw_invalid("noise: '" + name + "' is not a parameter of the " + model_name(model) +
                      " model");
    }
    *slot = value;
}

double get_noise_parameter(const NoiseModel& model, const std::string& name) {
    NoiseModel copy = model;
    const double* slot = parameter_slot(copy, name);
    if (slot == nullptr) {
        throw_invalid("noise: '" + name + "' is not a parameter of the " + model_name(model) +
                      " model");
    }
    return *slot;
}

} // namespace qgp
