#include "triamp/experiments.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <thread>

#include <json.hpp>

#include "triamp/noisemodel.hpp"
#include "triamp/response.hpp"
#include "triamp/scattering.hpp"
#include "triamp/stability.hpp"

namespace triamp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// detuning grids: wide for transmission figures, narrow+dense for delay
std::vector<double> transmission_grid_mhz() { return linspace(-3.0, 3.0, 601); }
std::vector<double> delay_grid_mhz() { return linspace(-1.0, 1.0, 2001); }

template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([=, &fn] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

std::map<std::string, double> merged(std::map<std::string, double> base,
                                     const std::map<std::string, double>& overrides) {
    for (const auto& [k, v] : overrides) base[k] = v;
    return base;
}

// Variant with f_G1 set, f_G2 from the stability rule, conditions applied.
SystemParams rule_variant(const std::map<std::string, double>& base_mhz, double f_g1) {
    auto m = base_mhz;
    m["f_G1"] = f_g1;
    m["f_G2"] = g2_stability_rule(f_g1);
    return apply_amplification_conditions(params_from_megahertz(m));
}

double stability_flag(const SystemParams& p) {
    return stability_report(p).stable ? 1.0 : 0.0;
}

std::string num_tag(double v) {
    // column-label-safe spelling of a numeric variant value
    std::string s = format_double(v);
    for (auto& c : s) {
        if (c == '.') c = 'p';
        if (c == '-') c = 'm';
    }
    return s;
}

std::vector<SweepDataset> make_fig2(const std::map<std::string, double>& mhz, int /*threads*/) {
    const SystemParams base = params_from_megahertz(mhz);
    const auto axis = linspace(0.0, 5.0, 251);
    const auto grid = stability_grid(base, axis, axis, true);

    SweepDataset d;
    d.name = "fig2_stability";
    d.columns = {{"G1", "MHz"}, {"G2", "MHz"}, {"stable", "bool"}, {"margin", "rad_per_us"}};
    d.params_mhz = mhz;
    d.rows.reserve(axis.size() * axis.size());
    for (std::size_t i1 = 0; i1 < axis.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < axis.size(); ++i2) {
            const auto v = grid.verdict(i1, i2);
            const double flag = v == CellVerdict::Indeterminate ? -1.0
                                : v == CellVerdict::Stable      ? 1.0
                                                                : 0.0;
            d.rows.push_back({axis[i1], axis[i2], flag, grid.margins[grid.index(i1, i2)]});
        }
    }
    return {std::move(d)};
}

std::vector<SweepDataset> make_fig3(const std::map<std::string, double>& mhz, int threads) {
    const auto grid = transmission_grid_mhz();
    std::vector<SweepDataset> out;
    for (const double phi : {-std::numbers::pi / 2.0, std::numbers::pi / 2.0}) {
        auto m = mhz;
        m["phi"] = phi;
        const SystemParams p = params_from_megahertz(m);
        SweepDataset d;
        d.name = phi < 0 ? "fig3_phi_minus" : "fig3_phi_plus";
        d.columns.push_back({"omega", "MHz"});
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                d.columns.push_back(
                    {"T" + std::to_string(i) + std::to_string(j) + "sq", "dimensionless"});
        d.params_mhz = m;
        d.flags["stable"] = stability_flag(p);
        d.rows.assign(grid.size(), {});
        parallel_for(grid.size(), threads, [&](std::size_t r) {
            const auto t = transmission_matrix(p, kTwoPi * grid[r]);
            std::vector<double> row;
            row.reserve(10);
            row.push_back(grid[r]);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) row.push_back(std::norm(t.matrix(i, j)));
            d.rows[r] = std::move(row);
        });
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<SweepDataset> make_fig4(const std::map<std::string, double>& mhz, int threads) {
    const auto phis = linspace(-std::numbers::pi, std::numbers::pi, 721);
    SweepDataset d;
    d.name = "fig4_phase_sweep";
    d.columns = {{"phi", "rad"},
                 {"T12sq", "dimensionless"},
                 {"T21sq", "dimensionless"},
                 {"stable", "bool"}};
    d.params_mhz = mhz;
    d.rows.assign(phis.size(), {});
    parallel_for(phis.size(), threads, [&](std::size_t r) {
        auto m = mhz;
        m["phi"] = phis[r];
        const SystemParams p = params_from_megahertz(m);
        d.rows[r] = {phis[r], std::norm(t12_closed(p, 0.0)), std::norm(t21_closed(p, 0.0)),
                     stability_flag(p)};
    });
    return {std::move(d)};
}

std::vector<SweepDataset> make_fig5(const std::map<std::string, double>& mhz, int threads) {
    const auto grid = transmission_grid_mhz();
    const std::vector<double> gains = {2.0, 1.0, 0.5, -2.0};

    SweepDataset d;
    d.name = "fig5_gain_sweep";
    d.columns.push_back({"omega", "MHz"});
    std::vector<SystemParams> variants;
    for (const double f_ga : gains) {
        auto m = mhz;
        m["f_ga"] = f_ga;
        const double f_g1 = m.at("f_G1");
        m["f_G2"] = g2_stability_rule(f_g1);
        const SystemParams p = apply_amplification_conditions(params_from_megahertz(m));
        variants.push_back(p);
        d.columns.push_back({"T21sq_ga" + num_tag(f_ga), "dimensionless"});
        d.flags["stable_ga" + num_tag(f_ga)] = stability_flag(p);
    }
    d.params_mhz = mhz;
    d.rows.assign(grid.size(), {});
    parallel_for(grid.size(), threads, [&](std::size_t r) {
        std::vector<double> row{grid[r]};
        for (const auto& p : variants) row.push_back(std::norm(t21_closed(p, kTwoPi * grid[r])));
        d.rows[r] = std::move(row);
    });
    return {std::move(d)};
}

std::vector<SweepDataset> make_fig67(const std::map<std::string, double>& mhz, int threads,
                                     bool sweep_eta) {
    const auto grid = transmission_grid_mhz();

    std::vector<SystemParams> variants;
    std::vector<std::string> tags;
    if (sweep_eta) {
        for (const double eta : {1.0, 0.75, 0.5}) {
            auto m = mhz;
            m["eta1"] = m["eta2"] = m["eta3"] = eta;
            variants.push_back(rule_variant(m, m.at("f_G1")));
            tags.push_back("eta" + num_tag(eta));
        }
    } else {
        for (const double f_g1 : {2.0, 5.0, 10.0}) {
            variants.push_back(rule_variant(mhz, f_g1));
            tags.push_back("G1_" + num_tag(f_g1));
        }
    }

    const std::string stem = sweep_eta ? "fig7" : "fig6";
    SweepDataset trans, noise;
    trans.name = stem + "_transmission";
    noise.name = stem + "_noise";
    trans.columns.push_back({"omega", "MHz"});
    noise.columns.push_back({"omega", "MHz"});
    for (std::size_t v = 0; v < variants.size(); ++v) {
        trans.columns.push_back({"T21sq_" + tags[v], "dimensionless"});
        noise.columns.push_back({"N2_" + tags[v], "quanta"});
        trans.flags["stable_" + tags[v]] = stability_flag(variants[v]);
    }
    noise.flags = trans.flags;
    trans.params_mhz = mhz;
    noise.params_mhz = mhz;

    trans.rows.assign(grid.size(), {});
    noise.rows.assign(grid.size(), {});
    parallel_for(grid.size(), threads, [&](std::size_t r) {
        const double w = kTwoPi * grid[r];
        std::vector<double> trow{grid[r]};
        std::vector<double> nrow{grid[r]};
        for (const auto& p : variants) {
            const auto t = transmission_matrix(p, w);
            const double t21sq = std::norm(t.matrix(1, 0));
            trow.push_back(t21sq);
            double s = 0.0;
            for (std::size_t i = 1; i < 7; ++i) s += 0.5 * std::norm(t.matrix(1, i));
            s += (p.n_m + 0.5) * std::norm(t.matrix(1, 7));
            nrow.push_back(s / t21sq);
        }
        trans.rows[r] = std::move(trow);
        noise.rows[r] = std::move(nrow);
    });
    return {std::move(trans), std::move(noise)};
}

std::vector<SweepDataset> make_fig8(const std::map<std::string, double>& mhz, int threads) {
    const auto grid_mhz = delay_grid_mhz();
    std::vector<double> grid(grid_mhz.size());
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = kTwoPi * grid_mhz[i];

    SweepDataset phase, delay, passive;
    phase.name = "fig8_phase";
    delay.name = "fig8_delay";
    passive.name = "fig8_delay_passive";
    phase.columns.push_back({"omega", "MHz"});
    delay.columns.push_back({"omega", "MHz"});
    passive.columns = {{"omega", "MHz"}, {"tau", "us"}};
    phase.params_mhz = mhz;
    delay.params_mhz = mhz;

    phase.rows.assign(grid.size(), {});
    delay.rows.assign(grid.size(), {});
    passive.rows.assign(grid.size(), {});
    for (std::size_t r = 0; r < grid.size(); ++r) {
        phase.rows[r].push_back(grid_mhz[r]);
        delay.rows[r].push_back(grid_mhz[r]);
        passive.rows[r].push_back(grid_mhz[r]);
    }

    std::vector<DelayCurve> curves(3);
    const std::vector<double> g1s = {2.0, 5.0, 10.0};
    parallel_for(g1s.size(), threads, [&](std::size_t v) {
        curves[v] = group_delay(rule_variant(mhz, g1s[v]), grid);
    });
    for (std::size_t v = 0; v < g1s.size(); ++v) {
        const SystemParams p = rule_variant(mhz, g1s[v]);
        phase.columns.push_back({"theta_G1_" + num_tag(g1s[v]), "rad"});
        delay.columns.push_back({"tau_G1_" + num_tag(g1s[v]), "us"});
        phase.flags["stable_G1_" + num_tag(g1s[v])] = stability_flag(p);
        for (std::size_t r = 0; r < grid.size(); ++r) {
            phase.rows[r].push_back(curves[v].phase[r]);
            delay.rows[r].push_back(curves[v].delay[r]);
        }
    }
    delay.flags = phase.flags;

    auto m = mhz;
    m["f_ga"] = -m.at("f_kappa1");
    m["f_G1"] = 5.0;
    m["f_G2"] = g2_stability_rule(5.0);
    const SystemParams pp = apply_amplification_conditions(params_from_megahertz(m));
    passive.params_mhz = m;
    passive.flags["stable"] = stability_flag(pp);
    const auto pcurve = group_delay(pp, grid);
    for (std::size_t r = 0; r < grid.size(); ++r) passive.rows[r].push_back(pcurve.delay[r]);

    return {std::move(phase), std::move(delay), std::move(passive)};
}

} // namespace

Figure figure_from_string(std::string_view name) {
    if (name == "fig2") return Figure::Fig2;
    if (name == "fig3") return Figure::Fig3;
    if (name == "fig4") return Figure::Fig4;
    if (name == "fig5") return Figure::Fig5;
    if (name == "fig6") return Figure::Fig6;
    if (name == "fig7") return Figure::Fig7;
    if (name == "fig8") return Figure::Fig8;
    throw ValidationError("unknown figure id: " + std::string(name));
}

std::string_view figure_name(Figure fig) {
    switch (fig) {
        case Figure::Fig2: return "fig2";
        case Figure::Fig3: return "fig3";
        case Figure::Fig4: return "fig4";
        case Figure::Fig5: return "fig5";
        case Figure::Fig6: return "fig6";
        case Figure::Fig7: return "fig7";
        case Figure::Fig8: return "fig8";
    }
    throw ValidationError("unknown figure enum value");
}

std::map<std::string, double> figure_preset_mhz(Figure fig) {
    auto m = default_params_mhz();
    switch (fig) {
        case Figure::Fig2:
        case Figure::Fig3:
        case Figure::Fig4:
            break;
        case Figure::Fig5:
        case Figure::Fig8: {
            m["f_G1"] = 5.0;
            m["f_G2"] = g2_stability_rule(5.0);
            const double f_j = m.at("f_J");
            m["f_G3"] = m["f_G2"] * m.at("f_kappa3") / (2.0 * f_j);
            break;
        }
        case Figure::Fig6:
            m["n_m"] = 100.0;
            break;
        case Figure::Fig7:
            m["n_m"] = 100.0;
            break;
    }
    return m;
}

std::vector<SweepDataset> figure_dataset(Figure fig, const std::map<std::string, double>& overrides,
                                         int threads) {
    const auto mhz = merged(figure_preset_mhz(fig), overrides);
    switch (fig) {
        case Figure::Fig2: return make_fig2(mhz, threads);
        case Figure::Fig3: return make_fig3(mhz, threads);
        case Figure::Fig4: return make_fig4(mhz, threads);
        case Figure::Fig5: return make_fig5(mhz, threads);
        case Figure::Fig6: return make_fig67(mhz, threads, false);
        case Figure::Fig7: return make_fig67(mhz, threads, true);
        case Figure::Fig8: return make_fig8(mhz, threads);
    }
    throw ValidationError("unknown figure enum value");
}

std::string format_double(double v) {
    char buf[40];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw IoError("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::string to_csv(const SweepDataset& d) {
    std::string out;
    for (std::size_t c = 0; c < d.columns.size(); ++c) {
        if (c) out += ',';
        out += d.columns[c].label + "[" + d.columns[c].unit + "]";
    }
    out += '\n';
    for (const auto& row : d.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const SweepDataset& d) {
    nlohmann::ordered_json j;
    j["name"] = d.name;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : d.params_mhz) j["params"][k] = v;
    if (!d.flags.empty()) {
        j["flags"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : d.flags) j["flags"][k] = v;
    }
    j["columns"] = nlohmann::ordered_json::array();
    for (const auto& c : d.columns) j["columns"].push_back({{"label", c.label}, {"unit", c.unit}});
    j["rows"] = d.rows;
    return j.dump(2) + "\n";
}

void write_dataset(const SweepDataset& d, Format format, const std::filesystem::path& destination) {
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw IoError("write_dataset: cannot open " + destination.string());
    out << (format == Format::Csv ? to_csv(d) : to_json(d));
    if (!out) throw IoError("write_dataset: write failed for " + destination.string());
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2) throw ValidationError("linspace: need at least 2 points");
    std::vector<double> v(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + step * static_cast<double>(i);
    v[n - 1] = hi;
    return v;
}

} // namespace triamp
