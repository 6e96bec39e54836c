#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "triamp/experiments.hpp"
#include "triamp/scattering.hpp"

using namespace triamp;

namespace {

std::size_t column_index(const SweepDataset& d, const std::string& label) {
    for (std::size_t i = 0; i < d.columns.size(); ++i)
        if (d.columns[i].label == label) return i;
    FAIL("missing column ", label);
    return 0;
}

const SweepDataset& by_name(const std::vector<SweepDataset>& sets, const std::string& name) {
    for (const auto& d : sets)
        if (d.name == name) return d;
    FAIL("missing dataset ", name);
    return sets.front();
}

} // namespace

TEST_CASE("figure_from_string round trip") {
    for (const auto fig : {Figure::Fig2, Figure::Fig3, Figure::Fig4, Figure::Fig5, Figure::Fig6,
                           Figure::Fig7, Figure::Fig8})
        CHECK(figure_from_string(figure_name(fig)) == fig);
    CHECK_THROWS_AS(figure_from_string("fig9"), ValidationError);
}

TEST_CASE("fig3 sweep: isolation and gain at the resonance row") {
    const auto sets = figure_dataset(Figure::Fig3);
    REQUIRE(sets.size() == 2);
    const auto& minus = by_name(sets, "fig3_phi_minus");
    REQUIRE(minus.rows.size() == 601);
    REQUIRE(minus.columns.size() == 10);
    CHECK(minus.flags.at("stable") == 1.0);

    const std::size_t c12 = column_index(minus, "T12sq");
    const std::size_t c21 = column_index(minus, "T21sq");
    const auto& mid = minus.rows[300];
    CHECK(mid[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(mid[c12] < 1e-20);
    CHECK(mid[c21] == doctest::Approx(192.64).epsilon(1e-3));

    // phi = +pi/2 swaps the roles of the two ports
    const auto& plus = by_name(sets, "fig3_phi_plus");
    const auto& pmid = plus.rows[300];
    CHECK(pmid[c21] < 1e-20);
    CHECK(pmid[c12] == doctest::Approx(192.64).epsilon(1e-3));
    for (std::size_t r = 0; r < minus.rows.size(); ++r) {
        CHECK(plus.rows[r][c12] == doctest::Approx(minus.rows[r][c21]).epsilon(1e-8));
        CHECK(plus.rows[r][c21] == doctest::Approx(minus.rows[r][c12]).epsilon(1e-8));
    }
}

TEST_CASE("fig4 sweep: shape and reciprocity at phi = 0") {
    const auto sets = figure_dataset(Figure::Fig4);
    REQUIRE(sets.size() == 1);
    const auto& d = sets.front();
    REQUIRE(d.rows.size() == 721);
    REQUIRE(d.columns.size() == 4);

    const std::size_t mid = 360; // phi = 0
    CHECK(d.rows[mid][0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.rows[mid][1] == doctest::Approx(d.rows[mid][2]).epsilon(1e-10));

    // direction reverses under phi -> -phi
    for (std::size_t k = 0; k < mid; ++k) {
        CHECK(d.rows[mid - k][1] == doctest::Approx(d.rows[mid + k][2]).epsilon(1e-8));
        CHECK(d.rows[mid - k][2] == doctest::Approx(d.rows[mid + k][1]).epsilon(1e-8));
    }
}

TEST_CASE("fig5 sweep: gain ordered by the gain rate, passive near unity") {
    const auto sets = figure_dataset(Figure::Fig5);
    const auto& d = sets.front();
    const auto& mid = d.rows[300];
    const std::size_t a = column_index(d, "T21sq_ga2");
    const std::size_t b = column_index(d, "T21sq_ga1");
    const std::size_t c = column_index(d, "T21sq_ga0p5");
    const std::size_t e = column_index(d, "T21sq_gam2");
    CHECK(mid[a] > mid[b]);
    CHECK(mid[b] > mid[c]);
    CHECK(mid[c] > mid[e]);
    CHECK(mid[e] >= 0.95);
    CHECK(mid[e] <= 1.0);
}

TEST_CASE("fig6 noise dataset matches added_noise at the midpoint") {
    const auto sets = figure_dataset(Figure::Fig6);
    const auto& noise = by_name(sets, "fig6_noise");
    const std::size_t cn = column_index(noise, "N2_G1_2");
    CHECK(noise.rows[300][cn] == doctest::Approx(1.753).epsilon(2e-3));
    // suppression with increasing coupling
    CHECK(noise.rows[300][column_index(noise, "N2_G1_10")] < noise.rows[300][cn]);
}

TEST_CASE("fig8 datasets: passive delay column well below the active one") {
    const auto sets = figure_dataset(Figure::Fig8);
    const auto& delay = by_name(sets, "fig8_delay");
    const auto& passive = by_name(sets, "fig8_delay_passive");
    REQUIRE(delay.rows.size() == 2001);
    const std::size_t c5 = column_index(delay, "tau_G1_5");
    CHECK(delay.rows[1000][c5] > 5.0 * passive.rows[1000][1]);
}

TEST_CASE("to_csv: header and empty dataset") {
    SweepDataset d;
    d.name = "t";
    d.columns = {{"omega", "MHz"}, {"T21sq", "dimensionless"}};
    CHECK(to_csv(d) == "omega[MHz],T21sq[dimensionless]\n");

    d.rows = {{0.5, 2.0}, {-1.0, 0.125}};
    CHECK(to_csv(d) == "omega[MHz],T21sq[dimensionless]\n0.5,2\n-1,0.125\n");
}

TEST_CASE("format_double round-trips") {
    for (const double v : {0.1, 1.0 / 3.0, -2.5e-17, 1e20, 192.64001}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("to_json: params snapshot reloads as a valid parameter set") {
    const auto sets = figure_dataset(Figure::Fig4);
    const auto& d = sets.front();
    const auto j = nlohmann::json::parse(to_json(d));
    CHECK(j.at("name") == "fig4_phase_sweep");
    std::map<std::string, double> params;
    for (const auto& [k, v] : j.at("params").items()) params[k] = v.get<double>();
    const SystemParams p = params_from_megahertz(params);
    const SystemParams q = params_from_megahertz(d.params_mhz);
    CHECK(p.G1 == q.G1);
    CHECK(p.kappa3 == q.kappa3);
    CHECK(p.phi == q.phi);
    CHECK(j.at("columns").size() == d.columns.size());
    CHECK(j.at("rows").size() == d.rows.size());
}

TEST_CASE("write_dataset: bad path raises IoError") {
    SweepDataset d;
    d.columns = {{"x", "1"}};
    CHECK_THROWS_AS(write_dataset(d, Format::Csv, "/nonexistent-dir/out.csv"), IoError);
}

TEST_CASE("serial and parallel sweeps serialize identically") {
    for (const auto fig : {Figure::Fig3, Figure::Fig5, Figure::Fig8}) {
        const auto serial = figure_dataset(fig, {}, 1);
        const auto parallel = figure_dataset(fig, {}, 4);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(to_csv(serial[i]) == to_csv(parallel[i]));
            CHECK(to_json(serial[i]) == to_json(parallel[i]));
        }
    }
}

TEST_CASE("repeated runs serialize identically") {
    const auto a = figure_dataset(Figure::Fig6, {}, 4);
    const auto b = figure_dataset(Figure::Fig6, {}, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]) == to_json(b[i]));
}

TEST_CASE("overrides reach the sweep parameters") {
    const auto sets = figure_dataset(Figure::Fig4, {{"f_kappa3", 4.0}});
    CHECK(sets.front().params_mhz.at("f_kappa3") == 4.0);
}

TEST_CASE("linspace endpoints and spacing") {
    const auto v = linspace(-1.0, 2.0, 4);
    REQUIRE(v.size() == 4);
    CHECK(v.front() == -1.0);
    CHECK(v.back() == 2.0);
    CHECK(v[1] == doctest::Approx(0.0));
    CHECK_THROWS_AS(linspace(0.0, 1.0, 1), ValidationError);
}
