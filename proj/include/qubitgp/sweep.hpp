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

// sweep.hpp — Parameter-sweep engine over noise-model grids with
// deterministic parallel execution: cells are handed out through a work
// queue but results land in slots keyed by cell index, so the output is
// identical regardless of worker count.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qubitgp/evolver.hpp"
#include "qubitgp/noise.hpp"
#include "qubitgp/types.hpp"

namespace qgp {

enum class SweepQuantity { gp_ratio, final_purity, final_bloch };

std::string quantity_name(SweepQuantity q);
SweepQuantity quantity_from_name(const std::string& name);

// Named parameter grid; the name must be a parameter of the active noise
// model (delta: gamma0/gamma1/kbt, gaussian: gamma0/gamma1/alpha0/alpha1,
// one_over_f: gamma/lambda/kbt).
struct SweepAxis {
    std::string param;
    std::vector<double> values;

    bool empty() const { return values.empty(); }
};

struct SweepSpec {
    QubitParams params;
    NoiseModel noise;   // template; axis parameters are overwritten per cell
    EvolveConfig evolve;
    SweepQuantity quantity = SweepQuantity::gp_ratio;
    SweepAxis axis1;
    SweepAxis axis2; // optional; empty => 1-D sweep
    int threads = 0; // 0 => hardware concurrency

    void validate() const;
};

struct SweepResult {
    std::string label;
    QubitParams params;
    NoiseModel noise;
    EvolveConfig evolve;
    SweepQuantity quantity = SweepQuantity::gp_ratio;
    std::string axis1_param;
    std::string axis2_param; // empty for 1-D
    std::vector<double> axis1_values;
    std::vector<double> axis2_values; // size 1 sentinel dimension when 1-D
    std::vector<double> values;       // row-major |axis1| x |axis2|
    std::vector<std::uint8_t> converged;
    std::vector<std::uint8_t> failed;
    std::vector<std::string> errors; // empty string per cell unless failed

    std::size_t rows() const { return axis1_values.size(); }
    std::size_t cols() const { return axis2_values.empty() ? 1 : axis2_values.size(); }
    std::size_t index(std::size_t i, std::size_t j) const { return i * cols() + j; }
    double value_at(std::size_t i, std::size_t j) const { return values[index(i, j)]; }
    bool is_1d() const { return axis2_param.empty(); }
};

// Per-cell failures are recorded in the flags and never abort the sweep.
SweepResult run_sweep(const SweepSpec& spec);

// The four canonical single-axis slices: gamma0 varying with gamma1 = 0 at
// alpha0 in {alpha_low, alpha_high}, and gamma1 varying with gamma0 = 0 at
// alpha1 in the same pair. Gaussian model, gp_ratio quantity.
std::array<SweepResult, 4> run_canonical_slices(const QubitParams& p, const EvolveConfig& cfg,
                                                const std::vector<double>& gamma_values,
                                                double alpha_low, double alpha_high,
                                                int threads);

// Long-form CSV: axis1,axis2,value,converged (2-D) or axis1,value,converged (1-D).
void write_sweep_csv(const SweepResult& result, std::ostream& out);

// JSON with the full provenance block (all fixed parameters, grids, flags).
std::string sweep_result_to_json(const SweepResult& result);

} // namespace qgp
