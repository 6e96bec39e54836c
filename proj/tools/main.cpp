// triamp CLI: stability, transmission, gain, noise, and delay sweeps for
// the three-cavity optomechanical directional amplifier model

#include <cmath>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "run_config.hpp"
#include "triamp/errors.hpp"
#include "triamp/noisemodel.hpp"
#include "triamp/numkernel.hpp"
#include "triamp/response.hpp"
#include "triamp/scattering.hpp"
#include "triamp/stability.hpp"

namespace {

using namespace triamp;
using cli::RunConfig;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

void echo_params(const RunConfig& cfg, const SystemParams& p) {
    for (const auto& n : cfg.notices) std::cerr << "notice: " << n << "\n";
    std::cout << "resolved parameters (MHz convention):\n";
    for (const auto& [k, v] : params_to_megahertz(p))
        std::cout << "  " << k << " = " << format_double(v) << "\n";
}

std::vector<double> omega_grid(const cli::GridSpec& g) {
    auto grid = linspace(g.omega_min_mhz, g.omega_max_mhz, g.points);
    for (auto& w : grid) w *= kTwoPi;
    return grid;
}

void emit(const SweepDataset& d, const RunConfig& cfg, const std::string& out_flag) {
    const std::string path = !out_flag.empty() ? out_flag : cfg.output_path.value_or("");
    if (path.empty()) {
        std::cout << (cfg.format == Format::Csv ? to_csv(d) : to_json(d));
    } else {
        write_dataset(d, cfg.format, path);
        std::cout << "wrote " << path << "\n";
    }
}

int run_validate(const RunConfig& cfg) {
    const SystemParams p = cli::resolve_params(cfg);
    echo_params(cfg, p);
    const auto rep = stability_report(p);
    std::cout << (rep.stable ? "stable" : (rep.marginal ? "marginal (treated as unstable)"
                                                        : "unstable"))
              << ", max Re lambda = " << format_double(rep.max_real_part) << " rad/us\n";
    return kExitOk;
}

int run_transmit(const RunConfig& cfg, const std::string& out_flag) {
    const SystemParams p = cli::resolve_params(cfg);
    echo_params(cfg, p);

    SweepDataset d;
    d.name = "transmission";
    d.columns.push_back({"omega", "MHz"});
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            d.columns.push_back({"T" + std::to_string(i) + std::to_string(j) + "sq",
                                 "dimensionless"});
    d.params_mhz = params_to_megahertz(p);
    for (const double w : omega_grid(cfg.grid)) {
        const auto t = transmission_matrix(p, w);
        std::vector<double> row{w / kTwoPi};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) row.push_back(std::norm(t.matrix(i, j)));
        d.rows.push_back(std::move(row));
    }
    emit(d, cfg, out_flag);
    return kExitOk;
}

int run_gain(const RunConfig& cfg) {
    const SystemParams p = cli::resolve_params(cfg);
    echo_params(cfg, p);
    const auto s = gain(p);
    const double isolation = std::norm(t12_closed(p, 0.0));
    std::cout << "T21(0) = " << format_double(s.t21_resonant.real()) << (s.t21_resonant.imag() >= 0 ? "+" : "")
              << format_double(s.t21_resonant.imag()) << "i\n"
              << "gain = " << format_double(s.gain_linear) << " ("
              << format_double(s.gain_db) << " dB)\n"
              << "|T12(0)|^2 = " << format_double(isolation) << "\n"
              << "bandwidth (numeric) = " << format_double(s.bandwidth / kTwoPi) << " MHz\n"
              << "gain-bandwidth product = " << format_double(s.gbp / kTwoPi) << " MHz\n";
    return kExitOk;
}

int run_stability(const RunConfig& cfg, bool grid_mode, const std::string& out_flag) {
    const SystemParams p = cli::resolve_params(cfg);
    echo_params(cfg, p);
    if (!grid_mode) {
        const auto rep = stability_report(p);
        std::cout << (rep.stable ? "stable" : "unstable") << ", max Re lambda = "
                  << format_double(rep.max_real_part) << " rad/us, margin = "
                  << format_double(rep.margin) << " rad/us\n";
        std::cout << "eigenvalues (rad/us):\n";
        for (const auto& ev : rep.eigenvalues)
            std::cout << "  " << format_double(ev.real()) << (ev.imag() >= 0 ? "+" : "")
                      << format_double(ev.imag()) << "i\n";
        return kExitOk;
    }
    const auto axis = linspace(0.0, 5.0, 251);
    const auto grid = stability_grid(p, axis, axis, cfg.apply_conditions);
    SweepDataset d;
    d.name = "stability_grid";
    d.columns = {{"G1", "MHz"}, {"G2", "MHz"}, {"stable", "bool"}, {"margin", "rad_per_us"}};
    d.params_mhz = params_to_megahertz(p);
    for (std::size_t i1 = 0; i1 < axis.size(); ++i1)
        for (std::size_t i2 = 0; i2 < axis.size(); ++i2) {
            const auto v = grid.verdict(i1, i2);
            d.rows.push_back({axis[i1], axis[i2],
                              v == CellVerdict::Indeterminate ? -1.0
                              : v == CellVerdict::Stable      ? 1.0
                                                              : 0.0,
                              grid.margins[grid.index(i1, i2)]});
        }
    emit(d, cfg, out_flag);
    return kExitOk;
}

int run_noise(const RunConfig& cfg, const std::string& out_flag) {
    const SystemParams p = cli::resolve_params(cfg);
    echo_params(cfg, p);
    SweepDataset d;
    d.name = "noise";
    d.columns = {{"omega", "MHz"}, {"S2_out", "quanta"}, {"N2", "quanta"}};
    d.params_mhz = params_to_megahertz(p);
    for (const double w : omega_grid(cfg.grid))
        d.rows.push_back({w / kTwoPi, output_spectrum_2(p, w), added_noise(p, w)});
    emit(d, cfg, out_flag);
    return kExitOk;
}

int run_delay(const RunConfig& cfg, const std::string& out_flag) {
    const SystemParams p = cli::resolve_params(cfg);
    echo_params(cfg, p);
    cli::GridSpec g = cfg.grid;
    if (!cfg.grid_given) g = {-1.0, 1.0, 2001}; // narrow active resonance
    const auto grid = omega_grid(g);
    const auto curve = group_delay(p, grid);
    SweepDataset d;
    d.name = "delay";
    d.columns = {{"omega", "MHz"}, {"theta", "rad"}, {"tau", "us"}};
    d.params_mhz = params_to_megahertz(p);
    for (std::size_t i = 0; i < grid.size(); ++i)
        d.rows.push_back({grid[i] / kTwoPi, curve.phase[i], curve.delay[i]});
    emit(d, cfg, out_flag);
    return kExitOk;
}

int run_figure(const RunConfig& cfg, const std::string& fig_id,
               const std::map<std::string, double>& overrides, const std::string& out_flag,
               int threads) {
    const Figure fig = figure_from_string(fig_id);
    const auto datasets = figure_dataset(fig, overrides, threads);
    std::filesystem::path dir = !out_flag.empty() ? out_flag : cfg.output_path.value_or(".");
    if (!dir.empty() && !std::filesystem::exists(dir)) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw IoError("figure: cannot create directory " + dir.string());
    }
    const char* ext = cfg.format == Format::Csv ? ".csv" : ".json";
    for (const auto& d : datasets) {
        const auto path = dir / (d.name + ext);
        write_dataset(d, cfg.format, path);
        std::cout << "wrote " << path.string() << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-cavity optomechanical directional amplifier simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::vector<std::string> sets;
    bool apply_conditions = false;
    int threads = 1;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_path, "output file (or directory for figure)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--set", sets, "override parameter, key=value; repeatable");
    app.add_flag("--apply-conditions", apply_conditions,
                 "apply the directional amplification conditions");
    app.add_option("--threads", threads, "worker threads for figure sweeps")
        ->check(CLI::PositiveNumber);

    auto* cmd_validate = app.add_subcommand("validate", "check config and report stability");
    auto* cmd_transmit = app.add_subcommand("transmit", "transmission probabilities over a grid");
    auto* cmd_gain = app.add_subcommand("gain", "resonant gain, bandwidth, GBP");
    auto* cmd_stability = app.add_subcommand("stability", "stability report or diagram");
    bool grid_mode = false;
    cmd_stability->add_flag("--grid", grid_mode, "emit the 251x251 stability diagram");
    auto* cmd_noise = app.add_subcommand("noise", "output spectrum and added noise over a grid");
    auto* cmd_delay = app.add_subcommand("delay", "phase and group delay over a grid");
    auto* cmd_figure = app.add_subcommand("figure", "emit a preset figure dataset");
    std::string fig_id;
    cmd_figure->add_option("id", fig_id, "fig2..fig8")->required();

    // let the global options (--set, --out, ...) appear after the subcommand
    for (auto* sub : {cmd_validate, cmd_transmit, cmd_gain, cmd_stability, cmd_noise, cmd_delay,
                      cmd_figure})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = config_path.empty() ? triamp::cli::default_config()
                                            : triamp::cli::load_config(config_path);
        if (format == "json") cfg.format = triamp::Format::Json;
        if (apply_conditions) cfg.apply_conditions = true;

        std::map<std::string, double> overrides;
        for (const auto& s : sets) {
            triamp::cli::apply_set_override(cfg, s);
            const auto eq = s.find('=');
            const std::string key = s.substr(0, eq);
            if (key != "rule_g2" && key != "conditions") overrides[key] = cfg.params_mhz.at(key);
        }

        if (cmd_validate->parsed()) return run_validate(cfg);
        if (cmd_transmit->parsed()) return run_transmit(cfg, out_path);
        if (cmd_gain->parsed()) return run_gain(cfg);
        if (cmd_stability->parsed()) return run_stability(cfg, grid_mode, out_path);
        if (cmd_noise->parsed()) return run_noise(cfg, out_path);
        if (cmd_delay->parsed()) return run_delay(cfg, out_path);
        if (cmd_figure->parsed()) return run_figure(cfg, fig_id, overrides, out_path, threads);
        return kExitValidation;
    } catch (const triamp::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const triamp::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const triamp::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const triamp::ConditionsNotApplied& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const triamp::Error& e) {
        // numerical failures: singularity, no convergence, divergent gain, ...
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
