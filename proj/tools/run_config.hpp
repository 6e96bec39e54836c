// run_config.hpp - JSON config ingestion for the triamp CLI

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triamp/experiments.hpp"
#include "triamp/sysmodel.hpp"

namespace triamp::cli {

struct GridSpec {
    double omega_min_mhz = -3.0;
    double omega_max_mhz = 3.0;
    std::size_t points = 601;
};

struct RunConfig {
    std::map<std::string, double> params_mhz; // MHz convention, full key set
    bool apply_conditions = false;
    bool rule_g2 = false; // recompute f_G2 from f_G1 via the stability rule
    GridSpec grid;
    bool grid_given = false;
    std::optional<std::string> output_path;
    Format format = Format::Csv;
    std::vector<std::string> notices; // filled-in defaults, for the echo
};

// Strict schema: top-level "params" object (MHz-convention keys; "s_in" may
// be given as a 3-element array), optional "grid", "output", "conditions".
// Missing params fall back to the baseline preset with a notice. Throws
// ParseError on malformed JSON, ValidationError listing every bad field.
RunConfig load_config(const std::filesystem::path& path);

// Baseline config used when no --config is given.
RunConfig default_config();

// Applies one "key=value" override onto cfg.params_mhz (or
// "rule_g2=true"/"conditions=true" switches). Idempotent.
void apply_set_override(RunConfig& cfg, const std::string& assignment);

// Resolved parameter set; applies the amplification conditions when
// requested.
SystemParams resolve_params(const RunConfig& cfg);

} // namespace triamp::cli
