#include "run_config.hpp"

#include <fstream>

#include <json.hpp>

#include "triamp/errors.hpp"

namespace triamp::cli {

namespace {

using nlohmann::json;

void merge_params(RunConfig& cfg, const json& params) {
    const auto& defaults = default_params_mhz();
    std::vector<std::string> bad;
    std::map<std::string, double> given;

    for (const auto& [key, value] : params.items()) {
        if (key == "s_in") {
            if (!value.is_array() || value.size() != 3) {
                bad.push_back("s_in (expected 3-element array)");
                continue;
            }
            given["s1_in"] = value[0].get<double>();
            given["s2_in"] = value[1].get<double>();
            given["s3_in"] = value[2].get<double>();
            continue;
        }
        if (defaults.find(key) == defaults.end()) {
            bad.push_back(key);
            continue;
        }
        if (!value.is_number()) {
            bad.push_back(key + " (expected number)");
            continue;
        }
        given[key] = value.get<double>();
    }
    if (!bad.empty()) {
        std::string msg = "config: invalid params fields:";
        for (const auto& b : bad) msg += " " + b;
        throw ValidationError(msg);
    }

    cfg.params_mhz = defaults;
    for (const auto& [k, v] : given) cfg.params_mhz[k] = v;
    for (const auto& [k, v] : defaults) {
        if (given.find(k) == given.end())
            cfg.notices.push_back("params." + k + " missing; using preset value " +
                                  format_double(v));
    }
}

} // namespace

RunConfig default_config() {
    RunConfig cfg;
    cfg.params_mhz = default_params_mhz();
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("config: cannot open " + path.string());

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("config: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw ValidationError("config: top level must be a JSON object");

    RunConfig cfg;
    std::vector<std::string> bad;
    for (const auto& [key, value] : doc.items()) {
        if (key == "params" || key == "grid" || key == "output" || key == "conditions") continue;
        bad.push_back(key);
        (void)value;
    }
    if (!bad.empty()) {
        std::string msg = "config: unknown top-level keys:";
        for (const auto& b : bad) msg += " " + b;
        throw ValidationError(msg);
    }

    if (doc.contains("params")) {
        if (!doc["params"].is_object())
            throw ValidationError("config: \"params\" must be an object");
        merge_params(cfg, doc["params"]);
    } else {
        cfg.params_mhz = default_params_mhz();
        cfg.notices.push_back("no params object; using baseline preset");
    }

    if (doc.contains("conditions")) {
        if (!doc["conditions"].is_boolean())
            throw ValidationError("config: \"conditions\" must be a boolean");
        cfg.apply_conditions = doc["conditions"].get<bool>();
    }

    if (doc.contains("grid")) {
        cfg.grid_given = true;
        const auto& g = doc["grid"];
        if (!g.is_object()) throw ValidationError("config: \"grid\" must be an object");
        for (const auto& [key, value] : g.items()) {
            if (key == "omega_min_mhz")
                cfg.grid.omega_min_mhz = value.get<double>();
            else if (key == "omega_max_mhz")
                cfg.grid.omega_max_mhz = value.get<double>();
            else if (key == "points")
                cfg.grid.points = value.get<std::size_t>();
            else
                throw ValidationError("config: unknown grid key: " + key);
        }
        if (!(cfg.grid.omega_max_mhz > cfg.grid.omega_min_mhz) || cfg.grid.points < 2)
            throw ValidationError("config: grid must have omega_max > omega_min and points >= 2");
    }

    if (doc.contains("output")) {
        const auto& o = doc["output"];
        if (!o.is_object()) throw ValidationError("config: \"output\" must be an object");
        for (const auto& [key, value] : o.items()) {
            if (key == "path")
                cfg.output_path = value.get<std::string>();
            else if (key == "format") {
                const auto f = value.get<std::string>();
                if (f == "csv")
                    cfg.format = Format::Csv;
                else if (f == "json")
                    cfg.format = Format::Json;
                else
                    throw ValidationError("config: output.format must be \"csv\" or \"json\"");
            } else {
                throw ValidationError("config: unknown output key: " + key);
            }
        }
    }
    return cfg;
}

void apply_set_override(RunConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ValidationError("--set expects key=value, got: " + assignment);
    const std::string key = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);

    const auto as_bool = [&]() {
        if (value == "true" || value == "1") return true;
        if (value == "false" || value == "0") return false;
        throw ValidationError("--set " + key + " expects true/false, got: " + value);
    };

    if (key == "rule_g2") {
        cfg.rule_g2 = as_bool();
        return;
    }
    if (key == "conditions") {
        cfg.apply_conditions = as_bool();
        return;
    }
    if (default_params_mhz().find(key) == default_params_mhz().end())
        throw ValidationError("--set: unknown parameter key: " + key);
    try {
        cfg.params_mhz[key] = std::stod(value);
    } catch (const std::exception&) {
        throw ValidationError("--set " + key + ": cannot parse number: " + value);
    }
}

SystemParams resolve_params(const RunConfig& cfg) {
    auto mhz = cfg.params_mhz;
    if (cfg.rule_g2) mhz["f_G2"] = g2_stability_rule(mhz.at("f_G1"));
    SystemParams p = params_from_megahertz(mhz);
    if (cfg.apply_conditions) p = apply_amplification_conditions(p);
    return p;
}

} // namespace triamp::cli
