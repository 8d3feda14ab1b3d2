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

// capi.cpp — extern "C" shim over the C++ core: opaque handles, status
// codes, and a thread-local error message. No exception escapes this file.

#include "qubitgp.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qubitgp/dissipators.hpp"
#include "qubitgp/errors.hpp"
#include "qubitgp/evolver.hpp"
#include "qubitgp/io.hpp"
#include "qubitgp/noise.hpp"
#include "qubitgp/phase.hpp"
#include "qubitgp/sweep.hpp"
#include "qubitgp/types.hpp"

struct qgp_noise {
    qgp::NoiseModel model;
};

struct qgp_coeff_table {
    qgp::CoeffTable table;
};

struct qgp_trajectory {
    qgp::Trajectory traj;
};

struct qgp_sweep {
    qgp::SweepSpec spec;
    qgp::SweepResult result;
    bool ran = false;
};

namespace {

thread_local std::string t_last_error;

qgp_status map_code(qgp::ErrorCode code) {
    switch (code) {
        case qgp::ErrorCode::invalid_argument: return QGP_ERROR_INVALID_ARGUMENT;
        case qgp::ErrorCode::domain: return QGP_ERROR_DOMAIN;
        case qgp::ErrorCode::numerical: return QGP_ERROR_NUMERICAL;
        case qgp::ErrorCode::state: return QGP_ERROR_STATE;
        case qgp::ErrorCode::io: return QGP_ERROR_IO;
        case qgp::ErrorCode::internal: return QGP_ERROR_INTERNAL;
    }
    return QGP_ERROR_INTERNAL;
}

template <typename Fn>
qgp_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        t_last_error.clear();
        return QGP_OK;
    } catch (const qgp::Error& e) {
        t_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return QGP_ERROR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return QGP_ERROR_INTERNAL;
    }
}

qgp_status fail_invalid(const char* msg) noexcept {
    t_last_error = msg;
    return QGP_ERROR_INVALID_ARGUMENT;
}

qgp::QubitParams to_params(const qgp_qubit_params* p) {
    qgp::QubitParams out{p->omega, p->delta};
    out.validate();
    return out;
}

qgp::EvolveConfig to_config(const qgp_evolve_config* cfg) {
    qgp::EvolveConfig out;
    out.t_end = cfg->t_end;
    out.dt = cfg->dt;
    out.sample_every = cfg->sample_every;
    out.use_table = cfg->use_table != 0;
    out.stepper = cfg->adaptive != 0 ? qgp::Stepper::rk45 : qgp::Stepper::rk4;
    out.rel_tol = cfg->rel_tol;
    out.validate();
    return out;
}

qgp_gp_result to_c_result(const qgp::GPResult& r) {
    qgp_gp_result out;
    out.phi = r.phi;
    out.phi_unitary = r.phi_unitary;
    out.ratio = r.ratio;
    out.min_gap = r.min_gap;
    out.converged = r.converged ? 1 : 0;
    out.degraded = r.degraded ? 1 : 0;
    return out;
}

} // namespace

extern "C" {

const char* qgp_version(void) {
    return "0.1.0";
}

const char* qgp_status_name(qgp_status status) {
    switch (status) {
        case QGP_OK: return "ok";
        case QGP_ERROR_INVALID_ARGUMENT: return "invalid_argument";
        case QGP_ERROR_DOMAIN: return "domain";
        case QGP_ERROR_NUMERICAL: return "numerical";
        case QGP_ERROR_STATE: return "state";
        case QGP_ERROR_IO: return "io";
        case QGP_ERROR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* qgp_last_error(void) {
    return t_last_error.c_str();
}

qgp_status qgp_cycle_time(const qgp_qubit_params* params, double* tau_out) {
    if (params == nullptr || tau_out == nullptr) {
        return fail_invalid("qgp_cycle_time: null argument");
    }
    return guarded([&] { *tau_out = to_params(params).cycle_time(); });
}

qgp_status qgp_unitary_berry_phase(const qgp_qubit_params* params, double* phi_out) {
    if (params == nullptr || phi_out == nullptr) {
        return fail_invalid("qgp_unitary_berry_phase: null argument");
    }
    return guarded([&] { *phi_out = qgp::unitary_berry_phase(to_params(params)); });
}

qgp_status qgp_noise_create_delta(double gamma0, double gamma1, double kbt, qgp_noise** out) {
    if (out == nullptr) {
        return fail_invalid("qgp_noise_create_delta: null output");
    }
    return guarded([&] {
        qgp::NoiseModel model = qgp::DeltaNoise{gamma0, gamma1, kbt};
        qgp::validate(model);
        *out = new qgp_noise{std::move(model)};
    });
}

qgp_status qgp_noise_create_gaussian(double gamma0, double gamma1, double alpha0, double alpha1,
                                     qgp_noise** out) {
    if (out == nullptr) {
        return fail_invalid("qgp_noise_create_gaussian: null output");
    }
    return guarded([&] {
        qgp::NoiseModel model = qgp::GaussianNoise{gamma0, gamma1, alpha0, alpha1};
        qgp::validate(model);
        *out = new qgp_noise{std::move(model)};
    });
}

qgp_status qgp_noise_create_one_over_f(double gamma, double lambda, int high_temperature,
                                       double kbt, qgp_noise** out) {
    if (out == nullptr) {
        return fail_invalid("qgp_noise_create_one_over_f: null output");
    }
    return guarded([&] {
        qgp::OneOverFNoise m;
        m.gamma = gamma;
        m.lambda = lambda;
        m.regime = high_temperature != 0 ? qgp::OneOverFRegime::high_temperature
                                         : qgp::OneOverFRegime::zero_temperature;
        m.kbt = kbt;
        qgp::NoiseModel model = m;
        qgp::validate(model);
        *out = new qgp_noise{std::move(model)};
    });
}

void qgp_noise_destroy(qgp_noise* noise) {
    delete noise;
}

qgp_status qgp_kernel_value(const qgp_noise* noise, int channel, double s, double* out) {
    if (noise == nullptr || out == nullptr) {
        return fail_invalid("qgp_kernel_value: null argument");
    }
    if (channel != 0 && channel != 1) {
        return fail_invalid("qgp_kernel_value: channel must be 0 or 1");
    }
    return guarded([&] {
        *out = channel == 0 ? qgp::kernel_longitudinal(noise->model, s)
                            : qgp::kernel_transverse(noise->model, s);
    });
}

qgp_status qgp_diffusion_coefficients(const qgp_qubit_params* params, const qgp_noise* noise,
                                      double t, double out[6]) {
    if (params == nullptr || noise == nullptr || out == nullptr) {
        return fail_invalid("qgp_diffusion_coefficients: null argument");
    }
    return guarded([&] {
        const auto c = qgp::diffusion_coefficients(to_params(params), noise->model, t).as_array();
        for (int i = 0; i < 6; ++i) {
            out[i] = c[static_cast<std::size_t>(i)];
        }
    });
}

qgp_status qgp_coeff_table_create(const qgp_qubit_params* params, const qgp_noise* noise,
                                  double t_end, long npts, qgp_coeff_table** out) {
    if (params == nullptr || noise == nullptr || out == nullptr) {
        return fail_invalid("qgp_coeff_table_create: null argument");
    }
    if (npts < 0) {
        return fail_invalid("qgp_coeff_table_create: npts must be positive");
    }
    return guarded([&] {
        *out = new qgp_coeff_table{qgp::build_coeff_table(
            to_params(params), noise->model, t_end, static_cast<std::size_t>(npts))};
    });
}

qgp_status qgp_coeff_table_eval(const qgp_coeff_table* table, double t, double out[6]) {
    if (table == nullptr || out == nullptr) {
        return fail_invalid("qgp_coeff_table_eval: null argument");
    }
    return guarded([&] {
        const auto c = table->table.at(t).as_array();
        for (int i = 0; i < 6; ++i) {
            out[i] = c[static_cast<std::size_t>(i)];
        }
    });
}

qgp_status qgp_coeff_table_write_csv(const qgp_coeff_table* table, const char* path) {
    if (table == nullptr || path == nullptr) {
        return fail_invalid("qgp_coeff_table_write_csv: null argument");
    }
    return guarded([&] {
        std::ostringstream buf;
        table->table.write_csv(buf);
        qgp::write_text_file(path, buf.str());
    });
}

void qgp_coeff_table_destroy(qgp_coeff_table* table) {
    delete table;
}

qgp_status qgp_evolve_config_default(const qgp_qubit_params* params, qgp_evolve_config* cfg_out) {
    if (params == nullptr || cfg_out == nullptr) {
        return fail_invalid("qgp_evolve_config_default: null argument");
    }
    return guarded([&] {
        const auto cfg = qgp::EvolveConfig::for_cycles(to_params(params), 1.0);
        cfg_out->t_end = cfg.t_end;
        cfg_out->dt = cfg.dt;
        cfg_out->sample_every = cfg.sample_every;
        cfg_out->use_table = cfg.use_table ? 1 : 0;
        cfg_out->adaptive = 0;
        cfg_out->rel_tol = cfg.rel_tol;
    });
}

qgp_status qgp_evolve(const qgp_qubit_params* params, const qgp_noise* noise,
                      const double bloch0[3], const qgp_evolve_config* cfg,
                      qgp_trajectory** out) {
    if (params == nullptr || noise == nullptr || cfg == nullptr || out == nullptr) {
        return fail_invalid("qgp_evolve: null argument");
    }
    return guarded([&] {
        const qgp::DensityMatrix rho0 =
            bloch0 == nullptr
                ? qgp::DensityMatrix::ground_state()
                : qgp::density_from_bloch(qgp::BlochVector{bloch0[0], bloch0[1], bloch0[2]});
        *out = new qgp_trajectory{
            qgp::evolve(to_params(params), noise->model, rho0, to_config(cfg))};
    });
}

void qgp_trajectory_destroy(qgp_trajectory* traj) {
    delete traj;
}

qgp_status qgp_trajectory_length(const qgp_trajectory* traj, size_t* n_out) {
    if (traj == nullptr || n_out == nullptr) {
        return fail_invalid("qgp_trajectory_length: null argument");
    }
    *n_out = traj->traj.times.size();
    return QGP_OK;
}

qgp_status qgp_trajectory_get(const qgp_trajectory* traj, size_t index, double* t_out,
                              double bloch_out[3]) {
    if (traj == nullptr || t_out == nullptr || bloch_out == nullptr) {
        return fail_invalid("qgp_trajectory_get: null argument");
    }
    if (index >= traj->traj.times.size()) {
        return fail_invalid("qgp_trajectory_get: index out of range");
    }
    *t_out = traj->traj.times[index];
    const qgp::BlochVector r = qgp::bloch_from_density(traj->traj.states[index]);
    bloch_out[0] = r.x;
    bloch_out[1] = r.y;
    bloch_out[2] = r.z;
    return QGP_OK;
}

qgp_status qgp_trajectory_final_bloch_norm(const qgp_trajectory* traj, double* out) {
    if (traj == nullptr || out == nullptr) {
        return fail_invalid("qgp_trajectory_final_bloch_norm: null argument");
    }
    *out = qgp::bloch_from_density(traj->traj.final_state()).norm();
    return QGP_OK;
}

qgp_status qgp_trajectory_write_csv(const qgp_trajectory* traj, const char* path) {
    if (traj == nullptr || path == nullptr) {
        return fail_invalid("qgp_trajectory_write_csv: null argument");
    }
    return guarded([&] {
        std::ostringstream buf;
        qgp::write_trajectory_csv(traj->traj, buf);
        qgp::write_text_file(path, buf.str());
    });
}

qgp_status qgp_geometric_phase(const qgp_trajectory* traj, qgp_gp_result* out) {
    if (traj == nullptr || out == nullptr) {
        return fail_invalid("qgp_geometric_phase: null argument");
    }
    return guarded([&] { *out = to_c_result(qgp::geometric_phase(traj->traj)); });
}

qgp_status qgp_gp_ratio(const qgp_qubit_params* params, const qgp_noise* noise,
                        const qgp_evolve_config* cfg, qgp_gp_result* out) {
    if (params == nullptr || noise == nullptr || cfg == nullptr || out == nullptr) {
        return fail_invalid("qgp_gp_ratio: null argument");
    }
    return guarded([&] {
        *out = to_c_result(qgp::gp_ratio(to_params(params), noise->model, to_config(cfg)));
    });
}

qgp_status qgp_gp_result_write_json(const qgp_gp_result* result, const char* path) {
    if (result == nullptr || path == nullptr) {
        return fail_invalid("qgp_gp_result_write_json: null argument");
    }
    return guarded([&] {
        qgp::GPResult r;
        r.phi = result->phi;
        r.phi_unitary = result->phi_unitary;
        r.ratio = result->ratio;
        r.min_gap = result->min_gap;
        r.converged = result->converged != 0;
        r.degraded = result->degraded != 0;
        qgp::write_text_file(path, qgp::gp_result_to_json(r));
    });
}

qgp_status qgp_sweep_create(const qgp_qubit_params* params, const qgp_noise* noise,
                            const qgp_evolve_config* cfg, const char* quantity, qgp_sweep** out) {
    if (params == nullptr || noise == nullptr || cfg == nullptr || quantity == nullptr ||
        out == nullptr) {
        return fail_invalid("qgp_sweep_create: null argument");
    }
    return guarded([&] {
        auto sweep = std::make_unique<qgp_sweep>();
        sweep->spec.params = to_params(params);
        sweep->spec.noise = noise->model;
        sweep->spec.evolve = to_config(cfg);
        sweep->spec.quantity = qgp::quantity_from_name(quantity);
        *out = sweep.release();
    });
}

qgp_status qgp_sweep_set_axis(qgp_sweep* sweep, int axis, const char* param, const double* values,
                              size_t count) {
    if (sweep == nullptr || param == nullptr || values == nullptr) {
        return fail_invalid("qgp_sweep_set_axis: null argument");
    }
    if (axis != 1 && axis != 2) {
        return fail_invalid("qgp_sweep_set_axis: axis must be 1 or 2");
    }
    return guarded([&] {
        qgp::SweepAxis ax;
        ax.param = param;
        ax.values.assign(values, values + count);
        (axis == 1 ? sweep->spec.axis1 : sweep->spec.axis2) = std::move(ax);
        sweep->ran = false;
    });
}

qgp_status qgp_sweep_run(qgp_sweep* sweep, int threads) {
    if (sweep == nullptr) {
        return fail_invalid("qgp_sweep_run: null argument");
    }
    return guarded([&] {
        sweep->spec.threads = threads;
        sweep->result = qgp::run_sweep(sweep->spec);
        sweep->ran = true;
    });
}

qgp_status qgp_sweep_dims(const qgp_sweep* sweep, size_t* rows_out, size_t* cols_out) {
    if (sweep == nullptr || rows_out == nullptr || cols_out == nullptr) {
        return fail_invalid("qgp_sweep_dims: null argument");
    }
    if (!sweep->ran) {
        return fail_invalid("qgp_sweep_dims: sweep has not been run");
    }
    *rows_out = sweep->result.rows();
    *cols_out = sweep->result.cols();
    return QGP_OK;
}

qgp_status qgp_sweep_cell(const qgp_sweep* sweep, size_t i, size_t j, double* value_out,
                          int* converged_out, int* failed_out) {
    if (sweep == nullptr || value_out == nullptr) {
        return fail_invalid("qgp_sweep_cell: null argument");
    }
    if (!sweep->ran) {
        return fail_invalid("qgp_sweep_cell: sweep has not been run");
    }
    if (i >= sweep->result.rows() || j >= sweep->result.cols()) {
        return fail_invalid("qgp_sweep_cell: index out of range");
    }
    const std::size_t idx = sweep->result.index(i, j);
    *value_out = sweep->result.values[idx];
    if (converged_out != nullptr) {
        *converged_out = sweep->result.converged[idx];
    }
    if (failed_out != nullptr) {
        *failed_out = sweep->result.failed[idx];
    }
    return QGP_OK;
}

qgp_status qgp_sweep_write_csv(const qgp_sweep* sweep, const char* path) {
    if (sweep == nullptr || path == nullptr) {
        return fail_invalid("qgp_sweep_write_csv: null argument");
    }
    if (!sweep->ran) {
        return fail_invalid("qgp_sweep_write_csv: sweep has not been run");
    }
    return guarded([&] {
        std::ostringstream buf;
        qgp::write_sweep_csv(sweep->result, buf);
        qgp::write_text_file(path, buf.str());
    });
}

qgp_status qgp_sweep_write_json(const qgp_sweep* sweep, const char* path) {
    if (sweep == nullptr || path == nullptr) {
        return fail_invalid("qgp_sweep_write_json: null argument");
    }
    if (!sweep->ran) {
        return fail_invalid("qgp_sweep_write_json: sweep has not been run");
    }
    return guarded(
        [&] { qgp::write_text_file(path, qgp::sweep_result_to_json(sweep->result)); });
}

void qgp_sweep_destroy(qgp_sweep* sweep) {
    delete sweep;
}

qgp_status qgp_write_canonical_slices(const qgp_qubit_params* params,
                                      const qgp_evolve_config* cfg, const double* gamma_values,
                                      size_t count, double alpha_low, double alpha_high,
                                      int threads, const char* out_dir) {
    if (params == nullptr || cfg == nullptr || gamma_values == nullptr || out_dir == nullptr) {
        return fail_invalid("qgp_write_canonical_slices: null argument");
    }
    return guarded([&] {
        const std::vector<double> gammas(gamma_values, gamma_values + count);
        const auto slices = qgp::run_canonical_slices(to_params(params), to_config(cfg), gammas,
                                                      alpha_low, alpha_high, threads);
        const std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        std::string bundle = "{\n  \"slices\": [\n";
        for (std::size_t k = 0; k < slices.size(); ++k) {
            std::ostringstream buf;
            qgp::write_sweep_csv(slices[k], buf);
            qgp::write_text_file((dir / (slices[k].label + ".csv")).string(), buf.str());
            qgp::write_text_file((dir / (slices[k].label + ".json")).string(),
                                 qgp::sweep_result_to_json(slices[k]));
            bundle += "    \"" + slices[k].label + "\"";
            bundle += (k + 1 < slices.size()) ? ",\n" : "\n";
        }
        bundle += "  ]\n}\n";
        qgp::write_text_file((dir / "slices.json").string(), bundle);
    });
}

} // extern "C"
