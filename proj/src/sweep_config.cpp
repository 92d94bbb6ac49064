// SPDX-License-Identifier: Apache-2.0
#include "iqmirror/sweep_config.hpp"

#include "iqmirror/special.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <set>

namespace iqmirror {

using nlohmann::json;

std::vector<std::pair<double, IqiParams>> SweepConfig::iqi_list() const {
    std::vector<std::pair<double, IqiParams>> out;
    if (explicit_mismatch) {
        const IqiParams p =
            mixer_coefficients(epsilon, phi_deg * std::numbers::pi / 180.0);
        out.emplace_back(linear_to_db(irr_linear(p)), p);
        return out;
    }
    for (double db : irr_db)
        out.emplace_back(db, params_for_irr(db));
    return out;
}

std::vector<Metric> SweepConfig::metrics() const {
    switch (metric) {
    case MetricSelection::ser: return {Metric::ser};
    case MetricSelection::outage: return {Metric::outage};
    case MetricSelection::both: return {Metric::ser, Metric::outage};
    }
    return {};
}

namespace {

double read_irr_entry(const json& v) {
    if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "ideal"))
        return std::numeric_limits<double>::infinity();
    if (!v.is_number())
        throw ConfigError("irr_db", "entries must be numbers or \"inf\"");
    return v.get<double>();
}

} // namespace

SweepConfig parse_sweep_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("<document>", "top level must be a JSON object");

    static const std::set<std::string> known = {
        "schemes", "modulation", "irr_db", "epsilon", "phi_deg", "snr_db",
        "rate",    "rates",      "metric", "seed",    "min_errors", "max_trials"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key))
            throw ConfigError(key, "unknown key");

    SweepConfig cfg;

    if (!j.contains("schemes") || !j["schemes"].is_array() || j["schemes"].empty())
        throw ConfigError("schemes", "required non-empty array of scheme names");
    for (const auto& s : j["schemes"]) {
        if (!s.is_string())
            throw ConfigError("schemes", "entries must be strings");
        const auto id = scheme_from_name(s.get<std::string>());
        if (!id)
            throw ConfigError("schemes", "unknown scheme '" + s.get<std::string>() + "'");
        cfg.schemes.push_back(*id);
    }

    if (j.contains("modulation")) {
        if (!j["modulation"].is_number_integer())
            throw ConfigError("modulation", "must be an integer (2, 4, 16 or 64)");
        cfg.modulation = j["modulation"].get<int>();
        if (cfg.modulation != 2 && cfg.modulation != 4 && cfg.modulation != 16 &&
            cfg.modulation != 64)
            throw ConfigError("modulation", "must be 2, 4, 16 or 64");
    }

    const bool has_irr = j.contains("irr_db");
    const bool has_mismatch = j.contains("epsilon") || j.contains("phi_deg");
    if (has_irr && has_mismatch)
        throw ConfigError("irr_db", "ambiguous: give either irr_db or epsilon/phi_deg");
    if (has_irr) {
        if (!j["irr_db"].is_array() || j["irr_db"].empty())
            throw ConfigError("irr_db", "must be a non-empty array");
        for (const auto& v : j["irr_db"])
            cfg.irr_db.push_back(read_irr_entry(v));
    } else if (has_mismatch) {
        if (!j.contains("epsilon"))
            throw ConfigError("epsilon", "required when phi_deg is given");
        if (!j["epsilon"].is_number())
            throw ConfigError("epsilon", "must be a number > 0");
        cfg.explicit_mismatch = true;
        cfg.epsilon = j["epsilon"].get<double>();
        if (!(cfg.epsilon > 0.0))
            throw ConfigError("epsilon", "must be > 0");
        if (j.contains("phi_deg")) {
            if (!j["phi_deg"].is_number())
                throw ConfigError("phi_deg", "must be a number");
            cfg.phi_deg = j["phi_deg"].get<double>();
            if (!(std::abs(cfg.phi_deg) < 90.0))
                throw ConfigError("phi_deg", "must satisfy |phi| < 90");
        }
    } else {
        cfg.irr_db = {std::numeric_limits<double>::infinity()}; // ideal front end
    }

    if (!j.contains("snr_db") || !j["snr_db"].is_array() || j["snr_db"].empty())
        throw ConfigError("snr_db", "required non-empty array of dB values");
    for (const auto& v : j["snr_db"]) {
        if (!v.is_number())
            throw ConfigError("snr_db", "entries must be numbers");
        cfg.snr_db.push_back(v.get<double>());
    }

    if (j.contains("rate") && j.contains("rates"))
        throw ConfigError("rate", "give either rate or rates, not both");
    if (j.contains("rate")) {
        if (!j["rate"].is_number() || !(j["rate"].get<double>() > 0.0))
            throw ConfigError("rate", "must be a number > 0");
        cfg.rates = {j["rate"].get<double>()};
    } else if (j.contains("rates")) {
        if (!j["rates"].is_array() || j["rates"].empty())
            throw ConfigError("rates", "must be a non-empty array");
        cfg.rates.clear();
        for (const auto& v : j["rates"]) {
            if (!v.is_number() || !(v.get<double>() > 0.0))
                throw ConfigError("rates", "entries must be numbers > 0");
            cfg.rates.push_back(v.get<double>());
        }
    }

    if (j.contains("metric")) {
        const std::string m = j["metric"].is_string() ? j["metric"].get<std::string>() : "";
        if (m == "ser")
            cfg.metric = MetricSelection::ser;
        else if (m == "outage")
            cfg.metric = MetricSelection::outage;
        else if (m == "both")
            cfg.metric = MetricSelection::both;
        else
            throw ConfigError("metric", "must be \"ser\", \"outage\" or \"both\"");
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            throw ConfigError("seed", "must be an unsigned integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("min_errors")) {
        if (!j["min_errors"].is_number_unsigned() && !j["min_errors"].is_number_integer())
            throw ConfigError("min_errors", "must be an unsigned integer");
        cfg.stopping.min_errors = j["min_errors"].get<std::uint64_t>();
        if (cfg.stopping.min_errors < 50)
            throw ConfigError("min_errors", "must be >= 50 for CI validity");
    }
    if (j.contains("max_trials")) {
        if (!j["max_trials"].is_number_unsigned() && !j["max_trials"].is_number_integer())
            throw ConfigError("max_trials", "must be an unsigned integer");
        cfg.stopping.max_trials = j["max_trials"].get<std::uint64_t>();
        if (cfg.stopping.max_trials == 0)
            throw ConfigError("max_trials", "must be > 0");
    }
    return cfg;
}

std::vector<PointSpec> config_points(const SweepConfig& cfg) {
    std::vector<PointSpec> pts;
    for (SchemeId scheme : cfg.schemes)
        for (const auto& [db, params] : cfg.iqi_list())
            for (double snr : cfg.snr_db) {
                PointSpec p;
                p.scheme = scheme;
                p.modulation = cfg.modulation;
                p.iqi = params;
                p.irr_db = db;
                p.snr_db = snr;
                p.rate = cfg.rates.front();
                pts.push_back(p);
            }
    return pts;
}

} // namespace iqmirror
