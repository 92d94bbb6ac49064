// SPDX-License-Identifier: Apache-2.0
//
// iqmirror: link-level simulator and closed-form analytics for multi-carrier
// receivers with RX I/Q imbalance and mirror-frequency diversity coding.

#include "iqmirror/csv.hpp"
#include "iqmirror/engine.hpp"
#include "iqmirror/presets.hpp"
#include "iqmirror/sweep_config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr const char* kVersion = "0.1.0";

using iqmirror::ConfigError;
using iqmirror::SweepConfig;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("--config", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json config_json(const SweepConfig& cfg) {
    nlohmann::json j;
    for (auto s : cfg.schemes)
        j["schemes"].push_back(iqmirror::scheme_name(s));
    j["modulation"] = cfg.modulation;
    if (cfg.explicit_mismatch) {
        j["epsilon"] = cfg.epsilon;
        j["phi_deg"] = cfg.phi_deg;
    } else {
        for (double v : cfg.irr_db)
            j["irr_db"].push_back(std::isinf(v) ? nlohmann::json("inf") : nlohmann::json(v));
    }
    j["snr_db"] = cfg.snr_db;
    j["rates"] = cfg.rates;
    j["metric"] = cfg.metric == iqmirror::MetricSelection::ser
                      ? "ser"
                      : (cfg.metric == iqmirror::MetricSelection::outage ? "outage" : "both");
    j["seed"] = cfg.seed;
    j["min_errors"] = cfg.stopping.min_errors;
    j["max_trials"] = cfg.stopping.max_trials;
    return j;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void write_manifest(const std::string& out_csv, const std::string& command,
                    const std::vector<SweepConfig>& configs, std::uint64_t seed, int workers) {
    nlohmann::json m;
    m["tool"] = "iqmirror";
    m["version"] = kVersion;
    m["command"] = command;
    m["created_utc"] = utc_timestamp();
    m["seed"] = seed;
    m["workers"] = workers;
    for (const auto& c : configs)
        m["configs"].push_back(config_json(c));
    m["output_csv"] = out_csv;
    std::ofstream out(out_csv + ".manifest.json");
    out << m.dump(2) << '\n';
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ConfigError("--out", "cannot write '" + out_path + "'");
    out << text;
}

int run_analytic(const std::string& config_path, const std::string& out_path, bool uncorrected) {
    SweepConfig cfg = iqmirror::parse_sweep_config(read_file(config_path));
    emit(iqmirror::analytic_csv(cfg, !uncorrected), out_path);
    if (!out_path.empty())
        write_manifest(out_path, "analytic", {cfg}, cfg.seed, 1);
    return 0;
}

int run_sweep(const std::string& config_path, std::uint64_t seed_override, bool seed_given,
              const std::string& out_path, int workers) {
    SweepConfig cfg = iqmirror::parse_sweep_config(read_file(config_path));
    if (seed_given)
        cfg.seed = seed_override;
    emit(iqmirror::sweep_csv(cfg, workers), out_path);
    if (!out_path.empty())
        write_manifest(out_path, "sweep", {cfg}, cfg.seed, workers);
    return 0;
}

int run_validate(const std::string& config_path, std::uint64_t seed, int workers) {
    std::vector<std::pair<iqmirror::Metric, iqmirror::PointSpec>> points;
    iqmirror::StoppingRule stopping = iqmirror::default_validation_stopping();
    if (config_path.empty()) {
        points = iqmirror::default_validation_points();
    } else {
        SweepConfig cfg = iqmirror::parse_sweep_config(read_file(config_path));
        points = iqmirror::validation_points_from_config(cfg);
        stopping = cfg.stopping;
        seed = cfg.seed;
    }
    const auto report = iqmirror::validate_points(points, seed, stopping, workers);
    std::cout << iqmirror::validation_text(report);
    return report.ok ? 0 : 1;
}

int run_preset(const std::string& name, std::uint64_t seed_override, bool seed_given,
               std::string out_path, int workers) {
    if (name == "list") {
        for (const auto& p : iqmirror::all_presets())
            std::cout << p.name << "  [" << (p.monte_carlo ? "monte-carlo" : "analytic") << "]  "
                      << p.description << '\n';
        return 0;
    }
    const iqmirror::Preset* preset = iqmirror::find_preset(name);
    if (!preset) {
        std::cerr << "config error: unknown preset '" << name << "' (try 'preset list')\n";
        return 2;
    }
    if (out_path.empty())
        out_path = preset->name + ".csv";
    std::string text;
    std::vector<SweepConfig> resolved;
    for (std::size_t i = 0; i < preset->configs.size(); ++i) {
        SweepConfig cfg = preset->configs[i];
        if (seed_given)
            cfg.seed = seed_override;
        resolved.push_back(cfg);
        std::string part = preset->monte_carlo ? iqmirror::sweep_csv(cfg, workers)
                                               : iqmirror::analytic_csv(cfg);
        if (i > 0)
            part.erase(0, part.find('\n') + 1); // drop repeated header
        text += part;
    }
    emit(text, out_path);
    write_manifest(out_path, "preset " + name, resolved,
                   seed_given ? seed_override : preset->configs.front().seed, workers);
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"iqmirror: mirror-subcarrier diversity link simulator"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path, out_path, preset_name;
    std::uint64_t seed = 1;
    int workers = 1;
    bool uncorrected_qam = false;

    auto* analytic = app.add_subcommand("analytic", "emit closed-form curves as CSV");
    analytic->add_option("--config", config_path, "JSON sweep config")->required();
    analytic->add_option("--out", out_path, "output CSV path (default: stdout)");
    analytic->add_flag("--uncorrected-qam-ser", uncorrected_qam,
                       "use the uncorrected QAM-IQI SER coefficient (audit mode)");

    auto* sweep = app.add_subcommand("sweep", "run Monte Carlo estimates, emit CSV + manifest");
    sweep->add_option("--config", config_path, "JSON sweep config")->required();
    auto* seed_opt = sweep->add_option("--seed", seed, "master seed (overrides config)");
    sweep->add_option("--out", out_path, "output CSV path (default: sweep.csv)");
    sweep->add_option("--workers", workers, "worker threads (result-invariant)");

    auto* validate = app.add_subcommand("validate", "cross-validate Monte Carlo vs closed forms");
    validate->add_option("--config", config_path, "JSON sweep config (default: built-in suite)");
    auto* vseed_opt = validate->add_option("--seed", seed, "master seed for the built-in suite");
    validate->add_option("--workers", workers, "worker threads");

    auto* preset = app.add_subcommand("preset", "run a named figure preset ('list' to list)");
    preset->add_option("name", preset_name, "preset name")->required();
    auto* pseed_opt = preset->add_option("--seed", seed, "master seed (overrides preset)");
    preset->add_option("--out", out_path, "output CSV path");
    preset->add_option("--workers", workers, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analytic->parsed())
            return run_analytic(config_path, out_path, uncorrected_qam);
        if (sweep->parsed())
            return run_sweep(config_path, seed, seed_opt->count() > 0,
                             out_path.empty() ? "sweep.csv" : out_path, workers);
        if (validate->parsed())
            return run_validate(config_path, vseed_opt->count() > 0 ? seed : 1, workers);
        if (preset->parsed())
            return run_preset(preset_name, seed, pseed_opt->count() > 0, out_path, workers);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
