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

#include "qubitgp/sweep.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "qubitgp/io.hpp"
#include "qubitgp/phase.hpp"

namespace qgp {

std::string quantity_name(SweepQuantity q) {
    switch (q) {
        case SweepQuantity::gp_ratio: return "gp_ratio";
        case SweepQuantity::final_purity: return "final_purity";
        case SweepQuantity::final_bloch: return "final_bloch";
    }
    return "unknown";
}

SweepQuantity quantity_from_name(const std::string& name) {
    if (name == "gp_ratio") return SweepQuantity::gp_ratio;
    if (name == "final_purity") return SweepQuantity::final_purity;
    if (name == "final_bloch") return SweepQuantity::final_bloch;
    throw_invalid("sweep: unknown quantity '" + name +
                  "' (expected gp_ratio | final_purity | final_bloch)");
}

namespace {

void validate_axis(const SweepAxis& axis, const NoiseModel& noise) {
    if (axis.values.empty()) {
        throw_invalid("sweep: axis '" + axis.param + "' has an empty grid");
    }
    // confirms the name belongs to the active model
    (void)get_noise_parameter(noise, axis.param);
    double prev = -std::numeric_limits<double>::infinity();
    for (const double v : axis.values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw_invalid("sweep: axis '" + axis.param + "' values must be finite and >= 0");
        }
        if (v <= prev) {
            throw_invalid("sweep: axis '" + axis.param + "' values must be strictly increasing");
        }
        prev = v;
    }
}

// Shared, insert-only table cache. Racing builders produce identical tables
// (pure function of the key), so hits and misses give the same numbers.
class TableCache {
  public:
    std::shared_ptr<const CoeffTable> get(const QubitParams& p, const NoiseModel& n, double t_end,
                                          std::size_t npts) {
        std::string key = model_name(n);
        for (const auto& name : noise_parameter_names(n)) {
            key += ';' + name + '=' + format_double(get_noise_parameter(n, name));
        }
        key += ";omega=" + format_double(p.omega) + ";delta=" + format_double(p.delta);
        key += ";t=" + format_double(t_end) + ";n=" + std::to_string(npts);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            const auto it = cache_.find(key);
            if (it != cache_.end()) {
                return it->second;
            }
        }
        auto table = std::make_shared<const CoeffTable>(build_coeff_table(p, n, t_end, npts));
        std::lock_guard<std::mutex> lock(mutex_);
        return cache_.emplace(key, std::move(table)).first->second;
    }

  private:
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const CoeffTable>> cache_;
};

struct CellOutcome {
    double value = std::numeric_limits<double>::quiet_NaN();
    bool converged = false;
    bool failed = false;
    std::string error;
};

CellOutcome compute_cell(const SweepSpec& spec, const NoiseModel& cell_noise, TableCache& cache) {
    CellOutcome out;
    try {
        EvolveConfig cfg = spec.evolve;
        if (spec.quantity == SweepQuantity::gp_ratio) {
            cfg.t_end = spec.params.cycle_time();
        }
        std::shared_ptr<const CoeffTable> table;
        if (cfg.use_table && !std::holds_alternative<DeltaNoise>(cell_noise)) {
            const double tau = spec.params.cycle_time();
            const auto npts = std::max<std::size_t>(
                64, static_cast<std::size_t>(std::ceil(
                        static_cast<double>(cfg.table_points_per_cycle) * cfg.t_end / tau)) +
                        1);
            table = cache.get(spec.params, cell_noise, cfg.t_end, npts);
        }
        const Trajectory traj = evolve(spec.params, cell_noise, DensityMatrix::ground_state(),
                                       cfg, table.get());
        switch (spec.quantity) {
            case SweepQuantity::gp_ratio: {
                const GPResult gp = geometric_phase(traj);
                out.value = gp.ratio;
                out.converged = gp.converged;
                break;
            }
            case SweepQuantity::final_purity:
                out.value = traj.final_state().purity();
                out.converged = true;
                break;
            case SweepQuantity::final_bloch:
                out.value = bloch_from_density(traj.final_state()).norm();
                out.converged = true;
                break;
        }
    } catch (const Error& e) {
        out.failed = true;
        out.error = e.what();
    }
    return out;
}

} // namespace

void SweepSpec::validate() const {
    params.validate();
    qgp::validate(noise);
    evolve.validate();
    validate_axis(axis1, noise);
    if (!axis2.empty()) {
        validate_axis(axis2, noise);
        if (axis1.param == axis2.param) {
            throw_invalid("sweep: axis1 and axis2 must name different parameters");
        }
    }
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();

    SweepResult result;
    result.params = spec.params;
    result.noise = spec.noise;
    result.evolve = spec.evolve;
    result.quantity = spec.quantity;
    result.axis1_param = spec.axis1.param;
    result.axis1_values = spec.axis1.values;
    if (!spec.axis2.empty()) {
        result.axis2_param = spec.axis2.param;
        result.axis2_values = spec.axis2.values;
    } else {
        result.axis2_values = {0.0}; // sentinel column for the 1-D case
    }

    const std::size_t n1 = result.rows();
    const std::size_t n2 = result.cols();
    const std::size_t n_cells = n1 * n2;
    result.values.assign(n_cells, std::numeric_limits<double>::quiet_NaN());
    result.converged.assign(n_cells, 0);
    result.failed.assign(n_cells, 0);
    result.errors.assign(n_cells, std::string());

    unsigned n_threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(n_cells));

    TableCache cache;
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        while (true) {
            const std::size_t cell = next.fetch_add(1);
            if (cell >= n_cells) {
                return;
            }
            const std::size_t i = cell / n2;
            const std::size_t j = cell % n2;
            NoiseModel cell_noise = spec.noise;
            set_noise_parameter(cell_noise, spec.axis1.param, result.axis1_values[i]);
            if (!spec.axis2.empty()) {
                set_noise_parameter(cell_noise, spec.axis2.param, result.axis2_values[j]);
            }
            const CellOutcome out = compute_cell(spec, cell_noise, cache);
            result.values[cell] = out.value;
            result.converged[cell] = out.converged ? 1 : 0;
            result.failed[cell] = out.failed ? 1 : 0;
            result.errors[cell] = out.error;
        }
    };

    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned k = 0; k < n_threads; ++k) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    return result;
}

std::array<SweepResult, 4> run_canonical_slices(const QubitParams& p, const EvolveConfig& cfg,
                                                const std::vector<double>& gamma_values,
                                                double alpha_low, double alpha_high,
                                                int threads) {
    if (gamma_values.empty()) {
        throw_invalid("slices: gamma grid must be non-empty");
    }
    const std::array<std::pair<std::string, double>, 4> plan = {{
        {"gamma0", alpha_low},
        {"gamma0", alpha_high},
        {"gamma1", alpha_low},
        {"gamma1", alpha_high},
    }};
    std::array<SweepResult, 4> out;
    for (std::size_t k = 0; k < plan.size(); ++k) {
        const auto& [axis, alpha] = plan[k];
        GaussianNoise noise;
        noise.alpha0 = alpha;
        noise.alpha1 = alpha;
        SweepSpec spec;
        spec.params = p;
        spec.noise = noise;
        spec.evolve = cfg;
        spec.quantity = SweepQuantity::gp_ratio;
        spec.axis1 = SweepAxis{axis, gamma_values};
        spec.threads = threads;
        out[k] = run_sweep(spec);
        out[k].label = "slice_" + axis + "_alpha_" + format_double(alpha);
    }
    return out;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
    if (result.is_1d()) {
        out << result.axis1_param << ",value,converged\n";
        for (std::size_t i = 0; i < result.rows(); ++i) {
            out << format_double(result.axis1_values[i]) << ','
                << format_double(result.value_at(i, 0)) << ','
                << static_cast<int>(result.converged[result.index(i, 0)]) << '\n';
        }
        return;
    }
    out << result.axis1_param << ',' << result.axis2_param << ",value,converged\n";
    for (std::size_t i = 0; i < result.rows(); ++i) {
        for (std::size_t j = 0; j < result.cols(); ++j) {
            out << format_double(result.axis1_values[i]) << ','
                << format_double(result.axis2_values[j]) << ','
                << format_double(result.value_at(i, j)) << ','
                << static_cast<int>(result.converged[result.index(i, j)]) << '\n';
        }
    }
}

namespace {

nlohmann::ordered_json noise_to_json(const NoiseModel& noise) {
    nlohmann::ordered_json j;
    j["model"] = model_name(noise);
    for (const auto& name : noise_parameter_names(noise)) {
        j[name] = get_noise_parameter(noise, name);
    }
    return j;
}

} // namespace

std::string sweep_result_to_json(const SweepResult& result) {
    nlohmann::ordered_json j;
    if (!result.label.empty()) {
        j["label"] = result.label;
    }
    j["quantity"] = quantity_name(result.quantity);
    j["fixed"] = {
        {"omega", result.params.omega},
        {"delta", result.params.delta},
        {"noise", noise_to_json(result.noise)},
        {"evolve",
         {{"t_end", result.evolve.t_end},
          {"dt", result.evolve.dt},
          {"sample_every", result.evolve.sample_every},
          {"use_table", result.evolve.use_table},
          {"stepper", result.evolve.stepper == Stepper::rk4 ? "rk4" : "rk45"},
          {"form", result.evolve.form == RhsForm::matrix ? "matrix" : "bloch"}}},
    };
    j["axis1"] = {{"param", result.axis1_param}, {"values", result.axis1_values}};
    if (!result.is_1d()) {
        j["axis2"] = {{"param", result.axis2_param}, {"values", result.axis2_values}};
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    nlohmann::ordered_json conv = nlohmann::ordered_json::array();
    nlohmann::ordered_json fail = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.rows(); ++i) {
        nlohmann::ordered_json vrow = nlohmann::ordered_json::array();
        nlohmann::ordered_json crow = nlohmann::ordered_json::array();
        nlohmann::ordered_json frow = nlohmann::ordered_json::array();
        for (std::size_t j2 = 0; j2 < result.cols(); ++j2) {
            vrow.push_back(result.value_at(i, j2));
            crow.push_back(static_cast<bool>(result.converged[result.index(i, j2)]));
            frow.push_back(static_cast<bool>(result.failed[result.index(i, j2)]));
        }
        rows.push_back(vrow);
        conv.push_back(crow);
        fail.push_back(frow);
    }
    j["values"] = rows;
    j["converged"] = conv;
    j["failed"] = fail;
    return j.dump(2) + "\n";
}

} // namespace qgp
