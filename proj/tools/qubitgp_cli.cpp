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

// qubitgp command-line front end. Links the C API of the shared library;
// all numerics happen behind that boundary.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical/runtime failure.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qubitgp.h"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RunError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void fail_run(const std::string& context) {
    throw RunError(context + ": " + qgp_last_error());
}

void check_status(qgp_status st, const std::string& context) {
    if (st == QGP_OK) {
        return;
    }
    if (st == QGP_ERROR_INVALID_ARGUMENT) {
        throw ConfigError(context + ": " + qgp_last_error());
    }
    fail_run(context);
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

// --- schema helpers ---------------------------------------------------------

void check_keys(const json& obj, const std::string& path, std::vector<std::string> allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const auto& a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw ConfigError("unknown key '" + path + "/" + key + "'");
        }
    }
}

const json& require_object(const json& parent, const std::string& path, const std::string& key) {
    if (!parent.contains(key)) {
        throw ConfigError("missing required block '" + path + "/" + key + "'");
    }
    const json& j = parent.at(key);
    if (!j.is_object()) {
        throw ConfigError("'" + path + "/" + key + "' must be an object");
    }
    return j;
}

double get_number(const json& obj, const std::string& path, const std::string& key,
                  double fallback, bool required = false) {
    if (!obj.contains(key)) {
        if (required) {
            throw ConfigError("missing required field '" + path + "/" + key + "'");
        }
        return fallback;
    }
    const json& j = obj.at(key);
    if (!j.is_number()) {
        throw ConfigError("'" + path + "/" + key + "' must be a number");
    }
    return j.get<double>();
}

long get_integer(const json& obj, const std::string& path, const std::string& key,
                 long fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json& j = obj.at(key);
    if (!j.is_number_integer()) {
        throw ConfigError("'" + path + "/" + key + "' must be an integer");
    }
    return j.get<long>();
}

bool get_bool(const json& obj, const std::string& path, const std::string& key, bool fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json& j = obj.at(key);
    if (!j.is_boolean()) {
        throw ConfigError("'" + path + "/" + key + "' must be a boolean");
    }
    return j.get<bool>();
}

std::string get_string(const json& obj, const std::string& path, const std::string& key,
                       const std::string& fallback, bool required = false) {
    if (!obj.contains(key)) {
        if (required) {
            throw ConfigError("missing required field '" + path + "/" + key + "'");
        }
        return fallback;
    }
    const json& j = obj.at(key);
    if (!j.is_string()) {
        throw ConfigError("'" + path + "/" + key + "' must be a string");
    }
    return j.get<std::string>();
}

// --- config model -------------------------------------------------------------

struct NoiseHandle {
    std::unique_ptr<qgp_noise, void (*)(qgp_noise*)> ptr{nullptr, qgp_noise_destroy};
};

struct LoadedConfig {
    json root;
    std::string raw;
    qgp_qubit_params qubit{0.5, 1.0};
    qgp_evolve_config evolve{};
    double tau = 0.0;
};

qgp_qubit_params parse_qubit(const json& root) {
    const json& q = require_object(root, "", "qubit");
    check_keys(q, "/qubit", {"omega"});
    qgp_qubit_params p;
    p.omega = get_number(q, "/qubit", "omega", 0.5, true);
    p.delta = 1.0;
    if (!(p.omega >= 0.0)) {
        throw ConfigError("'/qubit/omega' must be >= 0");
    }
    return p;
}

NoiseHandle parse_noise(const json& root) {
    const json& n = require_object(root, "", "noise");
    const std::string model = get_string(n, "/noise", "model", "", true);
    NoiseHandle handle;
    qgp_noise* raw = nullptr;
    if (model == "delta") {
        check_keys(n, "/noise", {"model", "gamma0", "gamma1", "kbt"});
        check_status(qgp_noise_create_delta(get_number(n, "/noise", "gamma0", 0.0, true),
                                            get_number(n, "/noise", "gamma1", 0.0, true),
                                            get_number(n, "/noise", "kbt", 1.0), &raw),
                     "noise");
    } else if (model == "gaussian") {
        check_keys(n, "/noise", {"model", "gamma0", "gamma1", "alpha0", "alpha1"});
        check_status(qgp_noise_create_gaussian(get_number(n, "/noise", "gamma0", 0.0, true),
                                               get_number(n, "/noise", "gamma1", 0.0, true),
                                               get_number(n, "/noise", "alpha0", 1.0, true),
                                               get_number(n, "/noise", "alpha1", 1.0, true), &raw),
                     "noise");
    } else if (model == "one_over_f") {
        check_keys(n, "/noise", {"model", "gamma", "lambda", "regime", "kbt"});
        const std::string regime = get_string(n, "/noise", "regime", "zero_t");
        if (regime != "zero_t" && regime != "high_t") {
            throw ConfigError("'/noise/regime' must be \"zero_t\" or \"high_t\"");
        }
        check_status(qgp_noise_create_one_over_f(get_number(n, "/noise", "gamma", 0.0, true),
                                                 get_number(n, "/noise", "lambda", 0.0, true),
                                                 regime == "high_t" ? 1 : 0,
                                                 get_number(n, "/noise", "kbt", 1.0), &raw),
                     "noise");
    } else {
        throw ConfigError("'/noise/model' must be \"delta\", \"gaussian\" or \"one_over_f\"");
    }
    handle.ptr.reset(raw);
    return handle;
}

qgp_evolve_config parse_evolve(const json& root, const qgp_qubit_params& qubit, double* tau_out) {
    double tau = 0.0;
    check_status(qgp_cycle_time(&qubit, &tau), "qubit");
    *tau_out = tau;

    qgp_evolve_config cfg;
    check_status(qgp_evolve_config_default(&qubit, &cfg), "evolve");
    if (!root.contains("evolve")) {
        return cfg;
    }
    const json& e = require_object(root, "", "evolve");
    check_keys(e, "/evolve",
               {"cycles", "t_end", "steps_per_cycle", "sample_every", "use_table", "stepper",
                "rel_tol"});
    if (e.contains("cycles") && e.contains("t_end")) {
        throw ConfigError("'/evolve' accepts either 'cycles' or 't_end', not both");
    }
    double t_end = tau;
    if (e.contains("t_end")) {
        t_end = get_number(e, "/evolve", "t_end", tau);
    } else {
        t_end = get_number(e, "/evolve", "cycles", 1.0) * tau;
    }
    if (!(t_end > 0.0)) {
        throw ConfigError("'/evolve': resulting t_end must be > 0");
    }
    const long steps_per_cycle = get_integer(e, "/evolve", "steps_per_cycle", 10000);
    if (steps_per_cycle < 1) {
        throw ConfigError("'/evolve/steps_per_cycle' must be >= 1");
    }
    cfg.t_end = t_end;
    cfg.dt = tau / static_cast<double>(steps_per_cycle);
    cfg.sample_every = get_integer(e, "/evolve", "sample_every", 1);
    cfg.use_table = get_bool(e, "/evolve", "use_table", true) ? 1 : 0;
    const std::string stepper = get_string(e, "/evolve", "stepper", "rk4");
    if (stepper != "rk4" && stepper != "rk45") {
        throw ConfigError("'/evolve/stepper' must be \"rk4\" or \"rk45\"");
    }
    cfg.adaptive = stepper == "rk45" ? 1 : 0;
    cfg.rel_tol = get_number(e, "/evolve", "rel_tol", 1e-10);
    return cfg;
}

LoadedConfig load_config(const std::string& path, const std::string& command) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    LoadedConfig cfg;
    cfg.raw = buf.str();
    try {
        cfg.root = json::parse(cfg.raw);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!cfg.root.is_object()) {
        throw ConfigError("config root must be a JSON object");
    }
    check_keys(cfg.root, "", {"qubit", "noise", "evolve", "trajectory", "phase", "sweep",
                              "kernels"});
    cfg.qubit = parse_qubit(cfg.root);
    cfg.evolve = parse_evolve(cfg.root, cfg.qubit, &cfg.tau);
    if ((command == "sweep" || command == "phase" || command == "kernels" ||
         command == "trajectory") &&
        !cfg.root.contains(command) && command != "trajectory" && command != "phase") {
        // trajectory and phase have usable defaults; sweep and kernels need a block
        throw ConfigError("missing required block '/" + command + "'");
    }
    return cfg;
}

// --- axis expansion ------------------------------------------------------------

std::vector<double> parse_axis_values(const json& axis, const std::string& path) {
    if (!axis.is_object()) {
        throw ConfigError("'" + path + "' must be an object");
    }
    check_keys(axis, path, {"param", "values", "scale", "min", "max", "points"});
    if (axis.contains("values")) {
        const json& vals = axis.at("values");
        if (!vals.is_array() || vals.empty()) {
            throw ConfigError("'" + path + "/values' must be a non-empty array");
        }
        std::vector<double> out;
        for (const auto& v : vals) {
            if (!v.is_number()) {
                throw ConfigError("'" + path + "/values' must contain numbers");
            }
            out.push_back(v.get<double>());
        }
        return out;
    }
    const std::string scale = get_string(axis, path, "scale", "linear");
    const double lo = get_number(axis, path, "min", 0.0, true);
    const double hi = get_number(axis, path, "max", 0.0, true);
    const long points = get_integer(axis, path, "points", 0);
    if (points < 1) {
        throw ConfigError("'" + path + "/points' must be >= 1");
    }
    if (!(hi > lo) && points > 1) {
        throw ConfigError("'" + path + "': max must exceed min");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    if (scale == "linear") {
        for (long i = 0; i < points; ++i) {
            const double u = points == 1 ? 0.0
                                         : static_cast<double>(i) / static_cast<double>(points - 1);
            out.push_back(lo + u * (hi - lo));
        }
    } else if (scale == "log") {
        if (!(lo > 0.0)) {
            throw ConfigError("'" + path + "': log scale requires min > 0");
        }
        const double llo = std::log(lo);
        const double lhi = std::log(hi);
        for (long i = 0; i < points; ++i) {
            const double u = points == 1 ? 0.0
                                         : static_cast<double>(i) / static_cast<double>(points - 1);
            out.push_back(std::exp(llo + u * (lhi - llo)));
        }
    } else {
        throw ConfigError("'" + path + "/scale' must be \"linear\" or \"log\"");
    }
    return out;
}

// --- manifest ---------------------------------------------------------------------

void write_manifest(const fs::path& out_dir, const std::string& command,
                    const std::string& config_path, const LoadedConfig& cfg, int threads,
                    const std::vector<std::string>& outputs) {
    json manifest;
    manifest["command"] = command;
    manifest["config_path"] = config_path;
    manifest["config_hash"] = "fnv1a64:" + hex64(fnv1a64(cfg.raw));
    manifest["library_version"] = qgp_version();
    manifest["threads"] = threads;
    manifest["outputs"] = outputs;
    manifest["config"] = cfg.root;
    std::ofstream out(out_dir / "manifest.json", std::ios::binary);
    if (!out) {
        throw RunError("cannot write manifest.json");
    }
    out << manifest.dump(2) << "\n";
}

// --- commands ------------------------------------------------------------------------

int cmd_trajectory(const LoadedConfig& cfg, const NoiseHandle& noise, const fs::path& out_dir,
                   const std::string& config_path, int threads) {
    std::string output = "trajectory.csv";
    if (cfg.root.contains("trajectory")) {
        const json& block = require_object(cfg.root, "", "trajectory");
        check_keys(block, "/trajectory", {"output"});
        output = get_string(block, "/trajectory", "output", output);
    }
    qgp_trajectory* traj = nullptr;
    check_status(qgp_evolve(&cfg.qubit, noise.ptr.get(), nullptr, &cfg.evolve, &traj),
                 "trajectory");
    const std::unique_ptr<qgp_trajectory, void (*)(qgp_trajectory*)> guard(traj,
                                                                           qgp_trajectory_destroy);
    const fs::path file = out_dir / output;
    check_status(qgp_trajectory_write_csv(traj, file.string().c_str()), "trajectory csv");
    double norm = 0.0;
    check_status(qgp_trajectory_final_bloch_norm(traj, &norm), "trajectory");
    std::cout << "1-|R(t_end)| = " << format_double(1.0 - norm)
              << "  (t_end = " << format_double(cfg.evolve.t_end) << ")\n";
    write_manifest(out_dir, "trajectory", config_path, cfg, threads, {output});
    return 0;
}

int cmd_phase(const LoadedConfig& cfg, const NoiseHandle& noise, const fs::path& out_dir,
              const std::string& config_path, int threads) {
    std::string output = "phase.json";
    if (cfg.root.contains("phase")) {
        const json& block = require_object(cfg.root, "", "phase");
        check_keys(block, "/phase", {"output"});
        output = get_string(block, "/phase", "output", output);
    }
    qgp_gp_result result;
    check_status(qgp_gp_ratio(&cfg.qubit, noise.ptr.get(), &cfg.evolve, &result), "phase");
    const fs::path file = out_dir / output;
    check_status(qgp_gp_result_write_json(&result, file.string().c_str()), "phase json");
    std::cout << "phi = " << format_double(result.phi)
              << "  phi_unitary = " << format_double(result.phi_unitary)
              << "  ratio = " << format_double(result.ratio)
              << "  converged = " << (result.converged ? "true" : "false") << "\n";
    write_manifest(out_dir, "phase", config_path, cfg, threads, {output});
    return 0;
}

int cmd_sweep(const LoadedConfig& cfg, const NoiseHandle& noise, const fs::path& out_dir,
              const std::string& config_path, int threads) {
    const json& block = require_object(cfg.root, "", "sweep");
    check_keys(block, "/sweep",
               {"quantity", "axis1", "axis2", "slices", "output_prefix"});
    const std::string prefix = get_string(block, "/sweep", "output_prefix", "sweep");
    std::vector<std::string> outputs;

    if (block.contains("slices")) {
        if (block.contains("axis1") || block.contains("axis2")) {
            throw ConfigError("'/sweep' accepts either 'slices' or axes, not both");
        }
        const json& s = block.at("slices");
        check_keys(s, "/sweep/slices",
                   {"gamma_min", "gamma_max", "points", "alpha_low", "alpha_high"});
        const double gmin = get_number(s, "/sweep/slices", "gamma_min", 0.0);
        const double gmax = get_number(s, "/sweep/slices", "gamma_max", 0.0, true);
        const long points = get_integer(s, "/sweep/slices", "points", 11);
        const double alpha_low = get_number(s, "/sweep/slices", "alpha_low", 0.03);
        const double alpha_high = get_number(s, "/sweep/slices", "alpha_high", 10.0);
        if (points < 1 || !(gmax > gmin) || gmin < 0.0) {
            throw ConfigError("'/sweep/slices': need points >= 1 and 0 <= gamma_min < gamma_max");
        }
        std::vector<double> gammas;
        for (long i = 0; i < points; ++i) {
            const double u = points == 1 ? 0.0
                                         : static_cast<double>(i) / static_cast<double>(points - 1);
            gammas.push_back(gmin + u * (gmax - gmin));
        }
        check_status(qgp_write_canonical_slices(&cfg.qubit, &cfg.evolve, gammas.data(),
                                                gammas.size(), alpha_low, alpha_high, threads,
                                                out_dir.string().c_str()),
                     "slices");
        for (const char* axis : {"gamma0", "gamma1"}) {
            for (const double alpha : {alpha_low, alpha_high}) {
                outputs.push_back(std::string("slice_") + axis + "_alpha_" +
                                  format_double(alpha) + ".csv");
            }
        }
        outputs.push_back("slices.json");
        write_manifest(out_dir, "sweep", config_path, cfg, threads, outputs);
        std::cout << "wrote " << outputs.size() << " slice files to " << out_dir.string() << "\n";
        return 0;
    }

    if (!block.contains("axis1")) {
        throw ConfigError("'/sweep' requires 'axis1' (or 'slices')");
    }
    const std::string quantity = get_string(block, "/sweep", "quantity", "gp_ratio");
    qgp_sweep* sweep = nullptr;
    check_status(qgp_sweep_create(&cfg.qubit, noise.ptr.get(), &cfg.evolve, quantity.c_str(),
                                  &sweep),
                 "sweep");
    const std::unique_ptr<qgp_sweep, void (*)(qgp_sweep*)> guard(sweep, qgp_sweep_destroy);

    const json& axis1 = block.at("axis1");
    const std::string param1 = get_string(axis1, "/sweep/axis1", "param", "", true);
    const std::vector<double> values1 = parse_axis_values(axis1, "/sweep/axis1");
    check_status(qgp_sweep_set_axis(sweep, 1, param1.c_str(), values1.data(), values1.size()),
                 "sweep axis1");
    if (block.contains("axis2")) {
        const json& axis2 = block.at("axis2");
        const std::string param2 = get_string(axis2, "/sweep/axis2", "param", "", true);
        const std::vector<double> values2 = parse_axis_values(axis2, "/sweep/axis2");
        check_status(qgp_sweep_set_axis(sweep, 2, param2.c_str(), values2.data(), values2.size()),
                     "sweep axis2");
    }
    check_status(qgp_sweep_run(sweep, threads), "sweep run");

    const std::string csv_name = prefix + ".csv";
    const std::string json_name = prefix + ".json";
    check_status(qgp_sweep_write_csv(sweep, (out_dir / csv_name).string().c_str()), "sweep csv");
    check_status(qgp_sweep_write_json(sweep, (out_dir / json_name).string().c_str()),
                 "sweep json");
    outputs = {csv_name, json_name};
    write_manifest(out_dir, "sweep", config_path, cfg, threads, outputs);

    size_t rows = 0;
    size_t cols = 0;
    check_status(qgp_sweep_dims(sweep, &rows, &cols), "sweep dims");
    std::cout << "sweep complete: " << rows << " x " << cols << " cells\n";
    return 0;
}

int cmd_kernels(const LoadedConfig& cfg, const NoiseHandle& noise, const fs::path& out_dir,
                const std::string& config_path, int threads) {
    const json& block = require_object(cfg.root, "", "kernels");
    check_keys(block, "/kernels", {"t_max", "t_max_cycles", "points", "output"});
    if (block.contains("t_max") && block.contains("t_max_cycles")) {
        throw ConfigError("'/kernels' accepts either 't_max' or 't_max_cycles', not both");
    }
    double t_max = cfg.tau;
    if (block.contains("t_max")) {
        t_max = get_number(block, "/kernels", "t_max", cfg.tau);
    } else {
        t_max = get_number(block, "/kernels", "t_max_cycles", 1.0) * cfg.tau;
    }
    const long points = get_integer(block, "/kernels", "points", 512);
    const std::string output = get_string(block, "/kernels", "output", "kernels.csv");
    if (points < 1 || !(t_max > 0.0)) {
        throw ConfigError("'/kernels': need points >= 1 and t_max > 0");
    }

    const long table_pts =
        std::max<long>(64, static_cast<long>(std::ceil(4096.0 * t_max / cfg.tau)) + 1);
    qgp_coeff_table* table = nullptr;
    check_status(qgp_coeff_table_create(&cfg.qubit, noise.ptr.get(), t_max, table_pts, &table),
                 "kernels table");
    const std::unique_ptr<qgp_coeff_table, void (*)(qgp_coeff_table*)> guard(
        table, qgp_coeff_table_destroy);

    std::ostringstream csv;
    csv << "t,phi0,phi1,dxx,fxy,fxz,fzx,fzy,dzz\n";
    for (long i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0
                                     : t_max * static_cast<double>(i) /
                                           static_cast<double>(points - 1);
        csv << format_double(t);
        for (const int channel : {0, 1}) {
            double phi = 0.0;
            // empty cell where the kernel has no pointwise value at this lag
            if (qgp_kernel_value(noise.ptr.get(), channel, t, &phi) == QGP_OK) {
                csv << ',' << format_double(phi);
            } else {
                csv << ',';
            }
        }
        double c[6];
        check_status(qgp_coeff_table_eval(table, t, c), "kernels eval");
        for (const double v : c) {
            csv << ',' << format_double(v);
        }
        csv << '\n';
    }
    std::ofstream out(out_dir / output, std::ios::binary);
    if (!out) {
        fail_run("kernels: cannot write " + output);
    }
    out << csv.str();
    out.close();
    write_manifest(out_dir, "kernels", config_path, cfg, threads, {output});
    std::cout << "wrote " << points << " rows to " << (out_dir / output).string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"noisy-qubit dynamics and geometric-phase toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir_str = ".";
    int threads = 0;
    bool validate_only = false;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON configuration file")->required();
        sub->add_option("--out", out_dir_str, "output directory (created on demand)");
        sub->add_option("--threads", threads, "worker thread cap (0 = hardware)");
        sub->add_flag("--validate-only", validate_only, "validate the config and exit");
    };

    CLI::App* trajectory = app.add_subcommand("trajectory", "integrate and export rho(t)");
    CLI::App* phase = app.add_subcommand("phase", "geometric phase after one cycle");
    CLI::App* sweep = app.add_subcommand("sweep", "parameter-sweep grids and slices");
    CLI::App* kernels = app.add_subcommand("kernels", "kernel/coefficient diagnostics");
    for (CLI::App* sub : {trajectory, phase, sweep, kernels}) {
        add_common(sub);
    }

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const LoadedConfig cfg = load_config(config_path, command);
        const NoiseHandle noise = parse_noise(cfg.root);
        if (validate_only) {
            std::cout << "config OK\n";
            return 0;
        }
        const fs::path out_dir(out_dir_str);
        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (ec) {
            std::cerr << "error: cannot create output directory: " << ec.message() << "\n";
            return 3;
        }
        if (command == "trajectory") {
            return cmd_trajectory(cfg, noise, out_dir, config_path, threads);
        }
        if (command == "phase") {
            return cmd_phase(cfg, noise, out_dir, config_path, threads);
        }
        if (command == "sweep") {
            return cmd_sweep(cfg, noise, out_dir, config_path, threads);
        }
        return cmd_kernels(cfg, noise, out_dir, config_path, threads);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const RunError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
