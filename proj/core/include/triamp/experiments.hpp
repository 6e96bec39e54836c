// experiments.hpp - parameter-sweep engine and dataset serialization

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "triamp/sysmodel.hpp"

namespace triamp {

enum class Figure { Fig2, Fig3, Fig4, Fig5, Fig6, Fig7, Fig8 };

Figure figure_from_string(std::string_view name);
std::string_view figure_name(Figure fig);

struct Column {
    std::string label;
    std::string unit;
};

struct SweepDataset {
    std::string name;
    std::vector<Column> columns;
    std::vector<std::vector<double>> rows;
    // full base-parameter snapshot, MHz convention; round-trips through
    // params_from_megahertz
    std::map<std::string, double> params_mhz;
    // per-variant annotations (e.g. stability verdicts), kept out of the
    // parameter snapshot so it stays a valid config
    std::map<std::string, double> flags;
};

// Caption defaults for each figure, as overrides on default_params_mhz().
std::map<std::string, double> figure_preset_mhz(Figure fig);

// Produces the sweep(s) behind one figure. Overrides are applied on top of
// the preset before variant-specific values. threads > 1 fans the frequency
// grid out across workers; output is identical to the serial result.
std::vector<SweepDataset> figure_dataset(Figure fig,
                                         const std::map<std::string, double>& overrides = {},
                                         int threads = 1);

enum class Format { Csv, Json };

std::string to_csv(const SweepDataset& d);
std::string to_json(const SweepDataset& d);

void write_dataset(const SweepDataset& d, Format format, const std::filesystem::path& destination);

// n uniformly spaced points with inclusive endpoints; n >= 2.
std::vector<double> linspace(double lo, double hi, std::size_t n);

// Shortest round-trip decimal representation.
std::string format_double(double v);

} // namespace triamp
